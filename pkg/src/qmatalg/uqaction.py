"""Chevalley-generator action on the braided superalgebra P.

The quantum supergroup acts through its vector representation on the
shared column alphabet of size m+n.  Only Chevalley generators are
modelled: K_a^{±1} for every column a, and E_{b,b+1} / E_{b+1,b} for
adjacent column pairs.  Words of generators act by sequential
application, which is all invariance testing needs.

A word in P is acted on through the coproduct, unrolled letter by
letter: the K's are grouplike and act diagonally on PBW words, while an
E hits one letter at a time, the complementary tensor factor
contributing a K-eigenvalue on the untouched prefix or suffix and the
super sign tracking the parity of the letters the E jumped over.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exactla import CoeffMatrix, CoeffVector, nullspace
from .laurent import ONE, ZERO, LaurentInt
from .qalgebra import NCElement, element_to_vector, graded_basis, normal_form

K, KINV, ERAISE, ELOWER = "K", "Kinv", "Eraise", "Elower"


@dataclass(frozen=True)
class ChevalleyGen:
    kind: str  # one of K, Kinv, Eraise, Elower
    index: int  # a for K_a^{±1}; b for E_{b,b+1} and E_{b+1,b}
    parity: int

    def __str__(self):
        return {
            K: f"K[{self.index}]",
            KINV: f"K^-1[{self.index}]",
            ERAISE: f"E[{self.index},{self.index + 1}]",
            ELOWER: f"E[{self.index + 1},{self.index}]",
        }[self.kind]


def _col_parity(i, m):
    return 0 if i <= m else 1


def _expected_parity(kind, index, m):
    if kind in (K, KINV):
        return 0
    # E_{b,b+1} and E_{b+1,b} are odd exactly when they straddle the
    # even/odd boundary of the column alphabet
    return 1 if index == m else 0


def _validate_gen(x, m, n):
    sz = m + n
    hi = sz if x.kind in (K, KINV) else sz - 1
    if not 1 <= x.index <= hi:
        raise ValueError(f"{x} out of range for column alphabet ({m},{n})")
    if x.parity != _expected_parity(x.kind, x.index, m):
        raise ValueError(f"{x} carries a parity inconsistent with ({m},{n})")


def chevalley_generators(m, n):
    """All generators, raising first, then lowering, then K, then K^-1."""
    sz = m + n
    out = [ChevalleyGen(ERAISE, b, _expected_parity(ERAISE, b, m)) for b in range(1, sz)]
    out += [ChevalleyGen(ELOWER, b, _expected_parity(ELOWER, b, m)) for b in range(1, sz)]
    out += [ChevalleyGen(K, a, 0) for a in range(1, sz + 1)]
    out += [ChevalleyGen(KINV, a, 0) for a in range(1, sz + 1)]
    return out


@dataclass(frozen=True)
class HopfData:
    coproduct: tuple  # pairs (left monomial, right monomial) of ChevalleyGen tuples
    counit: int
    antipode_sign: int
    antipode_monomial: tuple  # of ChevalleyGen


def hopf_data(x):
    a = x.index
    ka = ChevalleyGen(K, a, 0)
    kainv = ChevalleyGen(KINV, a, 0)
    if x.kind == K:
        return HopfData((((ka,), (ka,)),), 1, 1, (kainv,))
    if x.kind == KINV:
        return HopfData((((kainv,), (kainv,)),), 1, 1, (ka,))
    kb = ChevalleyGen(K, a + 1, 0)
    kbinv = ChevalleyGen(KINV, a + 1, 0)
    if x.kind == ERAISE:
        return HopfData(
            (((x,), (ka, kbinv)), ((), (x,))),
            0,
            -1,
            (x, kainv, kb),
        )
    if x.kind == ELOWER:
        return HopfData(
            (((x,), ()), ((kainv, kb), (x,))),
            0,
            -1,
            (ka, kbinv, x),
        )
    raise ValueError(f"unknown generator kind {x.kind!r}")


@lru_cache(maxsize=None)
def pi_matrix(x, m, n):
    """Vector representation on the column alphabet."""
    _validate_gen(x, m, n)
    sz = m + n
    rows = [[ZERO] * sz for _ in range(sz)]
    if x.kind in (K, KINV):
        for i in range(sz):
            rows[i][i] = ONE
        a = x.index
        e = 1 if _col_parity(a, m) == 0 else -1
        if x.kind == KINV:
            e = -e
        rows[a - 1][a - 1] = LaurentInt.q_power(e)
    elif x.kind == ERAISE:
        rows[x.index - 1][x.index] = ONE
    else:
        rows[x.index][x.index - 1] = ONE
    return CoeffMatrix(rows)


@lru_cache(maxsize=None)
def pi_antipode_matrix(x, m, n):
    """pi(S(x)), assembled by multiplying the antipode monomial's matrices."""
    _validate_gen(x, m, n)
    hd = hopf_data(x)
    sz = m + n
    acc = CoeffMatrix.identity(sz)
    for factor in hd.antipode_monomial:
        acc = acc @ pi_matrix(factor, m, n)
    if hd.antipode_sign < 0:
        acc = CoeffMatrix([[-e for e in row] for row in acc.rows])
    return acc


def _sg(e):
    return 1 if e % 2 == 0 else -1


def _require_P(pres):
    if pres.kind != "P":
        raise ValueError("the action is defined on P presentations only")
    return pres.params


def act_on_generator(x, g, pres):
    """Action of a single Chevalley generator on one P generator."""
    k, l, r, s, m, n = _require_P(pres)
    _validate_gen(x, m, n)
    i = g.col
    ip = _col_parity(i, m)
    rowp = (g.parity + ip) % 2
    xp = x.parity
    terms = []
    if g.family == "T":
        mat = pi_matrix(x, m, n)
        for c in range(1, m + n + 1):
            entry = mat.rows[c - 1][i - 1]
            if not entry:
                continue
            cp = _col_parity(c, m)
            e = xp * (rowp + ip + xp) + (rowp + cp) * (cp + ip)
            terms.append(((pres.gen_id("T", g.row, c),), _sg(e) * entry))
    else:
        mat = pi_antipode_matrix(x, m, n)
        for d in range(1, m + n + 1):
            entry = mat.rows[i - 1][d - 1]
            if not entry:
                continue
            dp = _col_parity(d, m)
            e = xp * (rowp + ip + xp) + (rowp + dp) * (dp + ip) + ip * (dp + ip)
            terms.append(((pres.gen_id("Tb", g.row, d),), _sg(e) * entry))
    return NCElement(terms)


def _k_exponent(a, asign, gid, pres, m):
    """Exponent of q in the K_a-eigenvalue of one letter."""
    g = pres.generators[gid]
    if g.col != a:
        return 0
    e = asign if _col_parity(a, m) == 0 else -asign
    return e if g.family == "T" else -e


def _word_k_exponent(a, asign, word, pres, m):
    return sum(_k_exponent(a, asign, gid, pres, m) for gid in word)


def _act_word(x, word, pres, m, n):
    """Raw action on one word; returns {word: LaurentInt}, not normalized."""
    if x.kind in (K, KINV):
        asign = 1 if x.kind == K else -1
        e = _word_k_exponent(x.index, asign, word, pres, m)
        return {word: LaurentInt.q_power(e)}
    if not word:
        return {}
    u = x.index
    gens = pres.generators
    out = {}
    if x.kind == ERAISE:
        # Delta(E) = E (x) K_u K_{u+1}^{-1} + 1 (x) E
        suffix_exp = [0] * (len(word) + 1)
        for j in range(len(word) - 1, -1, -1):
            suffix_exp[j] = (
                suffix_exp[j + 1]
                + _k_exponent(u, 1, word[j], pres, m)
                + _k_exponent(u + 1, -1, word[j], pres, m)
            )
        prefix_parity = 0
        for j, gid in enumerate(word):
            img = act_on_generator(x, gens[gid], pres)
            if img:
                scal = _sg(x.parity * prefix_parity) * LaurentInt.q_power(suffix_exp[j + 1])
                for w1, c1 in img.terms.items():
                    nw = word[:j] + w1 + word[j + 1:]
                    c = c1 * scal
                    prev = out.get(nw)
                    acc = c if prev is None else prev + c
                    if acc:
                        out[nw] = acc
                    elif prev is not None:
                        del out[nw]
            prefix_parity = (prefix_parity + gens[gid].parity) % 2
    else:
        # Delta(E) = E (x) 1 + K_u^{-1} K_{u+1} (x) E
        prefix_parity = 0
        prefix_exp = 0
        for j, gid in enumerate(word):
            img = act_on_generator(x, gens[gid], pres)
            if img:
                scal = _sg(x.parity * prefix_parity) * LaurentInt.q_power(prefix_exp)
                for w1, c1 in img.terms.items():
                    nw = word[:j] + w1 + word[j + 1:]
                    c = c1 * scal
                    prev = out.get(nw)
                    acc = c if prev is None else prev + c
                    if acc:
                        out[nw] = acc
                    elif prev is not None:
                        del out[nw]
            prefix_parity = (prefix_parity + gens[gid].parity) % 2
            prefix_exp += _k_exponent(u, -1, gid, pres, m) + _k_exponent(u + 1, 1, gid, pres, m)
    return out


def act(x, e, pres):
    """Action on an element, linear over words, result in canonical form."""
    k, l, r, s, m, n = _require_P(pres)
    _validate_gen(x, m, n)
    total = {}
    for word, coeff in e.terms.items():
        for w1, c1 in _act_word(x, word, pres, m, n).items():
            c = coeff * c1
            prev = total.get(w1)
            acc = c if prev is None else prev + c
            if acc:
                total[w1] = acc
            elif prev is not None:
                del total[w1]
    raw = NCElement.__new__(NCElement)
    raw.terms = total
    return normal_form(raw, pres)


def is_invariant(e, pres):
    k, l, r, s, m, n = _require_P(pres)
    e = normal_form(e, pres)
    for x in chevalley_generators(m, n):
        if x.kind == KINV:
            continue
        got = act(x, e, pres)
        want = e if x.kind == K else NCElement.zero()
        if got != want:
            return False
    return True


def _word_weight(word, pres, m, n):
    wt = [0] * (m + n)
    for gid in word:
        g = pres.generators[gid]
        wt[g.col - 1] += 1 if g.family == "T" else -1
    return tuple(wt)


def _row_sector(word, pres):
    trows = sorted(pres.generators[g].row for g in word if pres.generators[g].family == "T")
    brows = sorted(pres.generators[g].row for g in word if pres.generators[g].family == "Tb")
    return tuple(trows), tuple(brows)


def invariant_subspace(pres, bidegree):
    """Basis of the invariants inside one graded component.

    Vectors are coordinates over graded_basis(pres, bidegree).  K-invariance
    forces zero column weight, so the kernel is computed on the zero-weight
    words only, sector by sector: the E's never change row indices or
    families, hence they preserve the (T rows, Tb rows) multiset pair.
    """
    k, l, r, s, m, n = _require_P(pres)
    basis = graded_basis(pres, bidegree)
    position = {w: i for i, w in enumerate(basis)}
    egens = [x for x in chevalley_generators(m, n) if x.kind in (ERAISE, ELOWER)]
    sectors = {}
    for w in basis:
        sectors.setdefault(_row_sector(w, pres), []).append(w)
    out = []
    zero_wt = tuple([0] * (m + n))
    for key in sorted(sectors):
        words = sectors[key]
        domain = [w for w in words if _word_weight(w, pres, m, n) == zero_wt]
        if not domain:
            continue
        if not egens:
            for w in domain:
                entries = [ZERO] * len(basis)
                entries[position[w]] = ONE
                out.append(CoeffVector(entries))
            continue
        rows = []
        for x in egens:
            block = {}
            for j, w in enumerate(domain):
                img = act(x, NCElement.from_word(w), pres)
                for w1, c in img.terms.items():
                    row = block.get(w1)
                    if row is None:
                        row = block[w1] = [ZERO] * len(domain)
                    row[j] = c
            # only words actually hit by the action contribute constraints
            rows.extend(block[t] for t in sorted(block))
        if not rows:
            rows = [[ZERO] * len(domain)]
        for vec in nullspace(CoeffMatrix(rows)):
            entries = [ZERO] * len(basis)
            for j, w in enumerate(domain):
                entries[position[w]] = vec.entries[j]
            out.append(CoeffVector(entries))
    return out


def _action_matrix(x, pres, basis):
    position = {w: i for i, w in enumerate(basis)}
    rows = [[ZERO] * len(basis) for _ in basis]
    for j, w in enumerate(basis):
        img = act(x, NCElement.from_word(w), pres)
        for w1, c in img.terms.items():
            rows[position[w1]][j] = c
    return CoeffMatrix(rows)


def _meq(a, b):
    return all(x == y for ra, rb in zip(a.rows, b.rows) for x, y in zip(ra, rb))


def _msub(a, b):
    return CoeffMatrix([[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a.rows, b.rows)])


def _mscale(a, c):
    return CoeffMatrix([[x * c for x in row] for row in a.rows])


def verify_operator_relations(m, n, pres, bidegree):
    """Check the Cartan-sector defining relations as operator identities.

    R1: the K's are invertible and commute.  R2: conjugating an E by K_a
    rescales it by q to the pairing of the a-th and the E's root weight.
    R3: a raising and a lowering E supercommute to the printed Cartan
    element; both sides are multiplied by (q_a - q_a^{-1}) so the check
    stays in integer Laurent arithmetic.
    """
    pk, pl, pr, ps, pm, pn = _require_P(pres)
    if (pm, pn) != (m, n):
        raise ValueError(f"presentation has column alphabet ({pm},{pn}), not ({m},{n})")
    basis = graded_basis(pres, bidegree)
    sz = m + n
    amat = {x: _action_matrix(x, pres, basis) for x in chevalley_generators(m, n)}
    kmat = lambda a: amat[ChevalleyGen(K, a, 0)]
    kinv = lambda a: amat[ChevalleyGen(KINV, a, 0)]
    ident = CoeffMatrix.identity(len(basis))
    failures = []
    for a in range(1, sz + 1):
        if not _meq(kmat(a) @ kinv(a), ident):
            failures.append(f"R1: K[{a}] K^-1[{a}] != id")
        for b in range(a + 1, sz + 1):
            if not _meq(kmat(a) @ kmat(b), kmat(b) @ kmat(a)):
                failures.append(f"R1: K[{a}] and K[{b}] do not commute")
    r1_ok = not failures

    def root_sign(a, col):
        return (1 if _col_parity(a, m) == 0 else -1) * (1 if a == col else 0)

    for x in chevalley_generators(m, n):
        if x.kind not in (ERAISE, ELOWER):
            continue
        b = x.index
        lo, hi = (b, b + 1) if x.kind == ERAISE else (b + 1, b)
        for a in range(1, sz + 1):
            e = root_sign(a, lo) - root_sign(a, hi)
            lhs = kmat(a) @ amat[x] @ kinv(a)
            rhs = _mscale(amat[x], LaurentInt.q_power(e))
            if not _meq(lhs, rhs):
                failures.append(f"R2: K[{a}] {x} K^-1[{a}] != q^{e} {x}")
    r2_ok = not [f for f in failures if f.startswith("R2")]
    for a in range(1, sz):
        ea = ChevalleyGen(ERAISE, a, _expected_parity(ERAISE, a, m))
        qa_minus = LaurentInt.q_power(1 if _col_parity(a, m) == 0 else -1) - LaurentInt.q_power(
            -1 if _col_parity(a, m) == 0 else 1
        )
        for b in range(1, sz):
            fb = ChevalleyGen(ELOWER, b, _expected_parity(ELOWER, b, m))
            sign = _sg(ea.parity * fb.parity)
            bracket = _msub(amat[ea] @ amat[fb], _mscale(amat[fb] @ amat[ea], sign * ONE))
            lhs = _mscale(bracket, qa_minus)
            if a == b:
                rhs = _msub(kmat(a) @ kinv(a + 1), kinv(a) @ kmat(a + 1))
            else:
                rhs = CoeffMatrix.zeros(len(basis), len(basis))
            if not _meq(lhs, rhs):
                failures.append(f"R3: [E[{a},{a + 1}], E[{b + 1},{b}]] mismatch")
    r3_ok = not [f for f in failures if f.startswith("R3")]
    return {
        "m": m,
        "n": n,
        "bidegree": list(bidegree),
        "component_dim": len(basis),
        "checks": {"R1": r1_ok, "R2": r2_ok, "R3": r3_ok},
        "failures": failures,
        "pass": not failures,
    }
