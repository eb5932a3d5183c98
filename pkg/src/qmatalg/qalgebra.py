"""Quadratic superalgebra presentations and PBW normal forms.

Four presentations are supported, each on doubly indexed generators with a
Z_2-grading read off the index parities:

  * M       t_{ab}:  q-deformed matrix coordinates,
  * Mbar    tb_{ab}: the dual-side deformation (inverted q constants),
  * Mtilde  tt_{ab}: the variant whose plain/corrected swap cases trade
            places with those of M,
  * P       T_{ai} and Tb_{bj}: the braided product of an M on rows
            (k,l) with an Mbar on rows (r,s), over a shared column
            alphabet of size m+n.

Words are tuples of generator ids.  The canonical order lists generators
ascending by (col, row) within each family, with all T before all Tb in P.
A word is normal when its ids are non-decreasing and no odd generator is
repeated adjacently.  Every defining relation is oriented so that the
key-maximal two-letter word rewrites into strictly smaller words, which
makes leftmost reduction terminate; confluence is checked empirically by
the test suite, not assumed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .exactla import CoeffVector
from .laurent import ONE, Q, QINV, ZERO, LaurentInt, format_laurent, parse_laurent

Q_MINUS_QINV = Q - QINV


@dataclass(frozen=True)
class GenIndex:
    family: str  # text tag: "T", "Tb" or "Tt"
    row: int
    col: int
    parity: int

    def __str__(self):
        return f"{self.family}[{self.row},{self.col}]"


class NCElement:
    """Finite LaurentInt-linear combination of generator words."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for word, coeff in items:
            if not isinstance(coeff, LaurentInt):
                coeff = LaurentInt.from_int(coeff)
            if not coeff:
                continue
            prev = data.get(word)
            if prev is None:
                data[word] = coeff
            else:
                acc = prev + coeff
                if acc:
                    data[word] = acc
                else:
                    del data[word]
        self.terms = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): ONE})

    @classmethod
    def from_word(cls, word, coeff=ONE):
        return cls({tuple(word): coeff})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, NCElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for word, coeff in other.terms.items():
            prev = out.get(word)
            acc = coeff if prev is None else prev + coeff
            if acc:
                out[word] = acc
            elif prev is not None:
                del out[word]
        res = NCElement.__new__(NCElement)
        res.terms = out
        return res

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __neg__(self):
        return self.scaled(-1)

    def scaled(self, c):
        if not isinstance(c, LaurentInt):
            c = LaurentInt.from_int(c)
        if not c:
            return NCElement()
        res = NCElement.__new__(NCElement)
        res.terms = {w: coeff * c for w, coeff in self.terms.items()}
        return res

    def degree(self):
        """Max word length, or -1 for the zero element (rules are
        homogeneous, so canonical elements of interest are pure-degree)."""
        return max((len(w) for w in self.terms), default=-1)

    def __repr__(self):
        return f"NCElement({self.terms!r})"


def _index_parity(idx, even_count):
    return 0 if idx <= even_count else 1


def _q_power_of_index(parity, exponent_sign):
    # q_a = q^{(-1)^{[a]}}, raised to exponent_sign
    return LaurentInt.q_power(exponent_sign if parity == 0 else -exponent_sign)


def _sign(exponent):
    return 1 if exponent % 2 == 0 else -1


class AlgebraPresentation:
    """Immutable generator table plus oriented rewrite rules."""

    __slots__ = ("kind", "params", "generators", "ids", "rules", "_grid", "_by_index")

    def __init__(self, kind, params, generators, rules):
        self.kind = kind
        self.params = params
        self.generators = tuple(generators)
        self.ids = {g: i for i, g in enumerate(self.generators)}
        self._by_index = {(g.family, g.row, g.col): i for i, g in enumerate(self.generators)}
        self.rules = rules
        n = len(self.generators)
        grid = [[None] * n for _ in range(n)]
        for (i, j), rhs in rules.items():
            grid[i][j] = rhs
        self._grid = grid

    @property
    def ngens(self):
        return len(self.generators)

    def gen_id(self, family, row, col):
        gid = self._by_index.get((family, row, col))
        if gid is None:
            raise KeyError(f"no generator {family}[{row},{col}] in {self.kind}{self.params}")
        return gid

    def generator(self, family, row, col):
        return NCElement.from_word((self.gen_id(family, row, col),))

    def parity_of_word(self, word):
        return sum(self.generators[g].parity for g in word) % 2


def _family_generators(tag, nrows, even_rows, ncols, even_cols):
    gens = []
    for col in range(1, ncols + 1):
        for row in range(1, nrows + 1):
            p = (_index_parity(row, even_rows) + _index_parity(col, even_cols)) % 2
            gens.append(GenIndex(tag, row, col, p))
    return gens


def _matrix_family_rules(gens, offset, even_rows, even_cols, kind):
    """Oriented rules among the generators of one matrix family.

    kind selects the constants: "M" and "Mb" differ by inverting q_c, q_a
    and negating the correction tail; "Mt" swaps which mixed-index case
    gets the (q - q^-1) correction.
    """
    col_sign = -1 if kind == "Mb" else 1
    row_sign = 1 if kind == "M" else -1
    rules = {}
    index = {(g.row, g.col): offset + i for i, g in enumerate(gens)}
    for i, g in enumerate(gens):
        gi = offset + i
        if g.parity:
            rules[(gi, gi)] = ()
        for j in range(i):
            h = gens[j]
            hj = offset + j
            eps = _sign(g.parity * h.parity)
            rp = _index_parity(g.row, even_rows)
            hp = _index_parity(h.row, even_rows)
            cp = _index_parity(g.col, even_cols)
            hcp = _index_parity(h.col, even_cols)
            swap = (hj, gi)
            if g.col == h.col:
                coeff = eps * _q_power_of_index(cp, col_sign)
                rules[(gi, hj)] = ((coeff, swap),)
            elif g.row == h.row:
                coeff = eps * _q_power_of_index(rp, row_sign)
                rules[(gi, hj)] = ((coeff, swap),)
            elif g.row > h.row:
                # both row and col strictly descending
                if kind == "Mt":
                    rules[(gi, hj)] = ((eps * ONE, swap),)
                else:
                    tail_sign = _sign(rp * h.parity + hp * hcp)
                    tail = (index[(h.row, g.col)], index[(g.row, h.col)])
                    tc = tail_sign * Q_MINUS_QINV
                    if kind == "Mb":
                        tc = -tc
                    rules[(gi, hj)] = ((eps * ONE, swap), (tc, tail))
            else:
                # row ascending, col descending
                if kind == "Mt":
                    tail_sign = _sign(hp * g.parity + rp * cp)
                    tail = (index[(g.row, h.col)], index[(h.row, g.col)])
                    tc = -(eps * tail_sign) * Q_MINUS_QINV
                    rules[(gi, hj)] = ((eps * ONE, swap), (tc, tail))
                else:
                    rules[(gi, hj)] = ((eps * ONE, swap),)
    return rules


def _check_ranges(kind, *pairs):
    for label, (even, odd) in pairs:
        if even < 0 or odd < 0 or even + odd < 1:
            raise ValueError(f"{kind}: index range {label} must be nonempty, got ({even},{odd})")


def presentation_M(k, l, r, s):
    _check_ranges("M", ("rows", (k, l)), ("cols", (r, s)))
    gens = _family_generators("T", k + l, k, r + s, r)
    return AlgebraPresentation("M", (k, l, r, s), gens, _matrix_family_rules(gens, 0, k, r, "M"))


def presentation_Mbar(k, l, r, s):
    _check_ranges("Mbar", ("rows", (k, l)), ("cols", (r, s)))
    gens = _family_generators("Tb", k + l, k, r + s, r)
    return AlgebraPresentation("Mbar", (k, l, r, s), gens, _matrix_family_rules(gens, 0, k, r, "Mb"))


def presentation_Mtilde(k, l, r, s):
    _check_ranges("Mtilde", ("rows", (k, l)), ("cols", (r, s)))
    gens = _family_generators("Tt", k + l, k, r + s, r)
    return AlgebraPresentation("Mtilde", (k, l, r, s), gens, _matrix_family_rules(gens, 0, k, r, "Mt"))


def presentation_P(k, l, r, s, m, n):
    """T_{ai} over rows (k,l) and Tb_{bj} over rows (r,s), columns (m,n).

    Normal words keep every T factor before every Tb factor; a Tb passing
    a T either swaps with a sign (different columns) or picks up q_i^{-1}
    plus a correction sum over higher columns (equal columns).
    """
    _check_ranges("P", ("T rows", (k, l)), ("Tb rows", (r, s)), ("cols", (m, n)))
    tgens = _family_generators("T", k + l, k, m + n, m)
    bgens = _family_generators("Tb", r + s, r, m + n, m)
    gens = tgens + bgens
    nt = len(tgens)
    rules = _matrix_family_rules(tgens, 0, k, m, "M")
    rules.update(_matrix_family_rules(bgens, nt, r, m, "Mb"))
    t_index = {(g.row, g.col): i for i, g in enumerate(tgens)}
    b_index = {(g.row, g.col): nt + i for i, g in enumerate(bgens)}
    for bi, gb in enumerate(bgens):
        b, j = gb.row, gb.col
        bp = _index_parity(b, r)
        jp = _index_parity(j, m)
        for ti, gt in enumerate(tgens):
            a, i = gt.row, gt.col
            ap = _index_parity(a, k)
            ip = _index_parity(i, m)
            eps = _sign(gt.parity * gb.parity)
            if j != i:
                rhs = ((eps * ONE, (ti, nt + bi)),)
            else:
                lead = eps * _q_power_of_index(ip, -1)
                terms = [(lead, (ti, nt + bi))]
                for jj in range(i + 1, m + n + 1):
                    jjp = _index_parity(jj, m)
                    c = -_sign(bp * gt.parity + ap * jjp) * Q_MINUS_QINV
                    terms.append((c, (t_index[(a, jj)], b_index[(b, jj)])))
                rhs = tuple(terms)
            rules[(nt + bi, ti)] = rhs
    return AlgebraPresentation("P", (k, l, r, s, m, n), gens, rules)


_STEP_LIMIT = 10_000_000


def _validate_words(e, pres):
    n = pres.ngens
    for word in e.terms:
        for g in word:
            if not (0 <= g < n):
                raise ValueError(f"generator id {g} outside presentation {pres.kind}{pres.params}")


def normal_form_stats(e, pres):
    """Normal form plus the number of rewrite steps taken."""
    _validate_words(e, pres)
    grid = pres._grid
    agenda = dict(e.terms)
    out = {}
    steps = 0
    while agenda:
        word, coeff = agenda.popitem()
        pos = -1
        for p in range(len(word) - 1):
            rhs = grid[word[p]][word[p + 1]]
            if rhs is not None:
                pos = p
                break
        if pos < 0:
            prev = out.get(word)
            acc = coeff if prev is None else prev + coeff
            if acc:
                out[word] = acc
            elif prev is not None:
                del out[word]
            continue
        steps += 1
        if steps > _STEP_LIMIT:
            raise RuntimeError("rewriting step limit exceeded; non-terminating rule system?")
        head = word[:pos]
        tail = word[pos + 2:]
        for rc, rw in rhs:
            nw = head + rw + tail
            nc = coeff * rc
            prev = agenda.get(nw)
            acc = nc if prev is None else prev + nc
            if acc:
                agenda[nw] = acc
            elif prev is not None:
                del agenda[nw]
    res = NCElement.__new__(NCElement)
    res.terms = out
    return res, steps


def normal_form(e, pres):
    return normal_form_stats(e, pres)[0]


def is_normal(word, pres):
    grid = pres._grid
    return all(grid[word[p]][word[p + 1]] is None for p in range(len(word) - 1))


def multiply(a, b, pres):
    prod = {}
    for wa, ca in a.terms.items():
        for wb, cb in b.terms.items():
            w = wa + wb
            c = ca * cb
            prev = prod.get(w)
            acc = c if prev is None else prev + c
            if acc:
                prod[w] = acc
            elif prev is not None:
                del prod[w]
    raw = NCElement.__new__(NCElement)
    raw.terms = prod
    return normal_form(raw, pres)


def _normal_words_in(ids, parities, degree):
    out = []
    for word in combinations_with_replacement(ids, degree):
        ok = True
        for p in range(len(word) - 1):
            if word[p] == word[p + 1] and parities[word[p]]:
                ok = False
                break
        if ok:
            out.append(word)
    return out


def graded_basis(pres, degree):
    """Normal words of the given degree; for P, degree is (d_T, d_Tb)."""
    parities = [g.parity for g in pres.generators]
    if pres.kind == "P":
        d1, d2 = degree
        if d1 < 0 or d2 < 0:
            raise ValueError("bidegree components must be nonnegative")
        nt = sum(1 for g in pres.generators if g.family == "T")
        twords = _normal_words_in(range(nt), parities, d1)
        bwords = _normal_words_in(range(nt, pres.ngens), parities, d2)
        return [tw + bw for tw in twords for bw in bwords]
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    return _normal_words_in(range(pres.ngens), parities, degree)


def element_to_vector(e, basis):
    index = {w: i for i, w in enumerate(basis)}
    entries = [ZERO] * len(basis)
    for word, coeff in e.terms.items():
        pos = index.get(word)
        if pos is None:
            raise ValueError(f"word {word} outside the given basis")
        entries[pos] = coeff
    return CoeffVector(entries)


def verify_presentation_flatness(pres, max_degree):
    """Compare normal-word counts against the classical monomial grid.

    For the single-family presentations the count must also equal the
    hook-tableau pairing sum degree by degree; for P the grid count is the
    product of the two family grids per bidegree.
    """
    from .hookcomb import howe_dim_sum, supermatrix_monomial_count

    report = {"kind": pres.kind, "params": list(pres.params), "degrees": [], "pass": True}
    if pres.kind == "P":
        k, l, r, s, m, n = pres.params
        for total in range(max_degree + 1):
            for d1 in range(total + 1):
                d2 = total - d1
                count = len(graded_basis(pres, (d1, d2)))
                grid = supermatrix_monomial_count(k, l, m, n, d1) * supermatrix_monomial_count(
                    r, s, m, n, d2
                )
                ok = count == grid
                report["degrees"].append(
                    {"degree": [d1, d2], "basis_count": count, "grid_count": grid, "pass": ok}
                )
                report["pass"] = report["pass"] and ok
        return report
    k, l, r, s = pres.params
    for deg in range(max_degree + 1):
        count = len(graded_basis(pres, deg))
        grid = supermatrix_monomial_count(k, l, r, s, deg)
        howe = howe_dim_sum(k, l, r, s, deg)
        ok = count == grid == howe
        report["degrees"].append(
            {
                "degree": deg,
                "basis_count": count,
                "grid_count": grid,
                "howe_count": howe,
                "pass": ok,
            }
        )
        report["pass"] = report["pass"] and ok
    return report


# ------------------------------------------------------------ text format


def format_element(e, pres):
    if not e.terms:
        return "0"
    pieces = []
    for word in sorted(e.terms, key=lambda w: (len(w), w)):
        coeff = e.terms[word]
        wtext = " ".join(str(pres.generators[g]) for g in word)
        if len(coeff.terms) > 1:
            sign = 1
            body = f"({format_laurent(coeff)})"
            if wtext:
                body += f" * {wtext}"
        else:
            (exp, c), = coeff.terms.items()
            sign = 1 if c > 0 else -1
            mag = format_laurent(LaurentInt.q_power(exp, abs(c)))
            if not wtext:
                body = mag
            elif mag == "1":
                body = wtext
            else:
                body = f"{mag} * {wtext}"
        if not pieces:
            pieces.append(body if sign > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if sign > 0 else f"- {body}")
    return " ".join(pieces)


_GEN_RE = re.compile(r"([A-Za-z]+)\[(\d+),(\d+)\]")


def _split_top_level_terms(text):
    """Split on +/- outside parentheses; yields (sign, chunk, position)."""
    terms = []
    depth = 0
    sign = 1
    start = None
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced ')' at position {pos}")
        if depth == 0 and ch in "+-" and start is not None:
            before = text[start:pos].strip()
            # binary operator only if something nonblank came before and we
            # are not inside an exponent like q^-1
            if before and not before.endswith("^"):
                terms.append((sign, text[start:pos], start))
                sign = 1 if ch == "+" else -1
                start = pos + 1
                continue
        if start is None:
            if ch == "-":
                sign = -1
                continue
            if ch == "+" or ch.isspace():
                continue
            start = pos
    if depth != 0:
        raise ValueError("unbalanced '(' in element text")
    if start is None or not text[start:].strip():
        raise ValueError("empty trailing term in element text")
    terms.append((sign, text[start:], start))
    return terms


def parse_element(text, pres):
    """Inverse of format_element; raises ValueError with a position on bad input."""
    text = text.strip()
    if not text:
        raise ValueError("empty element text")
    if text == "0":
        return NCElement.zero()
    total = {}
    for sign, chunk, base in _split_top_level_terms(text):
        first = _GEN_RE.search(chunk)
        if first is None:
            coeff_text, word_text = chunk, ""
        else:
            coeff_text, word_text = chunk[: first.start()], chunk[first.start():]
        coeff_text = coeff_text.strip()
        if coeff_text.endswith("*"):
            coeff_text = coeff_text[:-1].strip()
        if not coeff_text:
            coeff = ONE
        elif coeff_text.startswith("("):
            if not coeff_text.endswith(")"):
                raise ValueError(f"malformed coefficient near position {base}")
            coeff = parse_laurent(coeff_text[1:-1])
        else:
            coeff = parse_laurent(coeff_text)
        word = []
        cursor = 0
        for match in _GEN_RE.finditer(word_text):
            if word_text[cursor: match.start()].strip():
                raise ValueError(
                    f"unexpected text {word_text[cursor:match.start()]!r} near position {base}"
                )
            fam, row, col = match.group(1), int(match.group(2)), int(match.group(3))
            try:
                word.append(pres.gen_id(fam, row, col))
            except KeyError as exc:
                raise ValueError(str(exc)) from None
            cursor = match.end()
        if word_text[cursor:].strip():
            raise ValueError(f"trailing junk {word_text[cursor:]!r} near position {base}")
        w = tuple(word)
        c = coeff if sign > 0 else -coeff
        prev = total.get(w)
        acc = c if prev is None else prev + c
        if acc:
            total[w] = acc
        elif prev is not None:
            del total[w]
    res = NCElement.__new__(NCElement)
    res.terms = total
    return res
