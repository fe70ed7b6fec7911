"""Brute-force ground truth on small finite Lie rings.

Everything here works on full operation tables, so ℤ/4-style rings that are
not algebras over any field are first-class.  The bijection search is the
oracle the rest of the package is measured against: it enumerates every
commutator-preserving bijection between two rings by backtracking, assigning
images most-constrained-element-first and propagating forced images (if
alpha(x) and alpha(y) are fixed then alpha([x,y]) has no choice).

The search space is partitioned by the image of the first assigned element;
partitions are explored independently (in ascending image order) and the
counts merged, which keeps results deterministic and makes the partitions
embarrassingly parallel if that is ever needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    CapExceeded,
    HypothesesNotMet,
    InvalidStructure,
    OrderMismatch,
    TooLarge,
)

ENUM_CAP = 32
FROM_ALGEBRA_CAP = 1 << 16
AUTO_VALIDATE_CAP = 64
SEMIGROUP_CAP = 512


@dataclass
class FiniteValidation:
    ok: bool
    failures: list  # up to 8 human-readable failure strings


@dataclass
class FiniteLieRing:
    """A Lie ring given by full tables on elements 0..N-1 (0 is the zero)."""

    name: str
    order: int
    add: list  # N x N
    neg: list  # N
    bracket: list  # N x N

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def well_formed(self) -> bool:
        N = self.order
        if len(self.add) != N or len(self.neg) != N or len(self.bracket) != N:
            return False
        for row in list(self.add) + list(self.bracket):
            if len(row) != N or any(not (0 <= v < N) for v in row):
                return False
        return all(0 <= v < N for v in self.neg)

    def validate(self, max_failures: int = 8) -> FiniteValidation:
        """Exhaustive axiom check: abelian group, ℤ-bilinear alternating
        bracket, Jacobi.  O(N^3) table lookups."""
        fails: list = []

        def note(msg):
            if len(fails) < max_failures:
                fails.append(msg)

        if not self.well_formed():
            return FiniteValidation(False, ["tables malformed (shape or out-of-range entry)"])
        N, add, neg, brk = self.order, self.add, self.neg, self.bracket
        for a in range(N):
            if add[a][0] != a:
                note(f"0 is not neutral at {a}")
            if add[a][neg[a]] != 0:
                note(f"neg({a}) is not an inverse")
            for b in range(N):
                if add[a][b] != add[b][a]:
                    note(f"addition not commutative at ({a},{b})")
        for a in range(N):
            for b in range(N):
                ab = add[a][b]
                for c in range(N):
                    if add[ab][c] != add[a][add[b][c]]:
                        note(f"addition not associative at ({a},{b},{c})")
                        break
        for a in range(N):
            if brk[a][a] != 0:
                note(f"[x,x] != 0 at {a}")
            for b in range(N):
                if brk[a][b] != neg[brk[b][a]]:
                    note(f"bracket not antisymmetric at ({a},{b})")
        for a in range(N):
            for b in range(N):
                ab = add[a][b]
                for c in range(N):
                    if brk[ab][c] != add[brk[a][c]][brk[b][c]]:
                        note(f"bracket not additive in the left slot at ({a},{b},{c})")
                        break
        for a in range(N):
            for b in range(N):
                for c in range(N):
                    j = add[add[brk[brk[a][b]][c]][brk[brk[b][c]][a]]][brk[brk[c][a]][b]]
                    if j != 0:
                        note(f"Jacobi fails at ({a},{b},{c})")
                        break
        return FiniteValidation(not fails, fails)

    # -- substructures ----------------------------------------------------

    def derived_elements(self) -> frozenset:
        """Additive closure of all bracket values (the derived subring)."""
        gens = {self.bracket[a][b] for a in range(self.order) for b in range(self.order)}
        closed = {0} | gens
        frontier = list(closed)
        while frontier:
            x = frontier.pop()
            for y in list(closed):
                s = self.add[x][y]
                if s not in closed:
                    closed.add(s)
                    frontier.append(s)
        return frozenset(closed)

    def center_elements(self) -> frozenset:
        return frozenset(
            z for z in range(self.order)
            if all(self.bracket[z][x] == 0 for x in range(self.order))
        )

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        return {"order": self.order, "add": self.add, "bracket": self.bracket}

    @classmethod
    def from_json_dict(cls, data: dict, name: str = "ring") -> "FiniteLieRing":
        try:
            order = int(data["order"])
            add = [[int(v) for v in row] for row in data["add"]]
            bracket = [[int(v) for v in row] for row in data["bracket"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidStructure(f"bad finite ring JSON: {exc}") from exc
        neg = []
        for i in range(order):
            if i >= len(add) or len(add[i]) != order:
                raise InvalidStructure("add table has wrong shape")
            inverses = [j for j in range(order) if add[i][j] == 0]
            if len(inverses) != 1:
                raise InvalidStructure(f"element {i} has {len(inverses)} additive inverses")
            neg.append(inverses[0])
        ring = cls(name, order, add, neg, bracket)
        if not ring.well_formed():
            raise InvalidStructure("tables malformed (shape or out-of-range entry)")
        return ring


# ---------------------------------------------------------------------------
# constructors


def vector_index(v, p: int) -> int:
    idx = 0
    for k, digit in enumerate(v):
        idx += int(digit) * p**k
    return idx


def index_vector(idx: int, p: int, dim: int):
    return [(idx // p**k) % p for k in range(dim)]


def from_algebra(g, validate: bool | None = None) -> FiniteLieRing:
    """Expand a structure-constant algebra over F_p into full tables.

    Element i corresponds to the coordinate vector of its base-p digits.
    Rings of order at most 64 are axiom-checked automatically; the check can
    be forced or suppressed with ``validate``.
    """
    F = g.field
    if F.kind != "Fp":
        raise InvalidStructure("table expansion needs a prime field")
    p = F.order
    N = p**g.dim
    if N > FROM_ALGEBRA_CAP:
        raise CapExceeded(f"ring order {N} exceeds cap {FROM_ALGEBRA_CAP}")
    vecs = [index_vector(i, p, g.dim) for i in range(N)]
    add = [[vector_index([(a + b) % p for a, b in zip(vecs[i], vecs[j])], p)
            for j in range(N)] for i in range(N)]
    neg = [vector_index([(-a) % p for a in vecs[i]], p) for i in range(N)]
    bracket = [[vector_index(g.bracket(vecs[i], vecs[j]), p) for j in range(N)]
               for i in range(N)]
    ring = FiniteLieRing(f"{g.name}/F_{p}", N, add, neg, bracket)
    if validate is None:
        validate = N <= AUTO_VALIDATE_CAP
    if validate:
        rep = ring.validate()
        if not rep.ok:
            raise InvalidStructure(f"expanded tables fail axioms: {rep.failures[:2]}")
    return ring


def cyclic_ring(m: int) -> FiniteLieRing:
    """ℤ/m with the zero bracket."""
    if m < 1:
        raise InvalidStructure("modulus must be at least 1")
    add = [[(i + j) % m for j in range(m)] for i in range(m)]
    neg = [(-i) % m for i in range(m)]
    bracket = [[0] * m for _ in range(m)]
    return FiniteLieRing(f"Z/{m}", m, add, neg, bracket)


def klein_ring() -> FiniteLieRing:
    """The Klein four-group with the zero bracket (bitwise xor addition)."""
    add = [[i ^ j for j in range(4)] for i in range(4)]
    neg = [0, 1, 2, 3]
    bracket = [[0] * 4 for _ in range(4)]
    return FiniteLieRing("klein", 4, add, neg, bracket)


# ---------------------------------------------------------------------------
# bijection enumeration


def _enumerate_bijections(r: FiniteLieRing, s: FiniteLieRing):
    """Yield every bijection alpha with alpha(0)=0 preserving commutators.

    Backtracking with forced-image propagation: once alpha(x) and alpha(a)
    are both set, alpha([x,a]) and alpha([a,x]) are forced; contradictions
    prune the branch.  The next element to assign is the unassigned one with
    the most nonzero bracket constraints against already-assigned elements
    (ties broken by label).  Yielded tuples are complete and consistent.
    """
    N = r.order
    if N != s.order:
        raise OrderMismatch(f"orders differ: {N} vs {s.order}")
    rbrk, sbrk = r.bracket, s.bracket
    alpha: list = [None] * N
    used = [False] * N
    alpha[0] = 0
    used[0] = True
    assigned = [0]

    def undo(trail):
        for c in trail:
            used[alpha[c]] = False
            alpha[c] = None
            assigned.pop()

    def pick_next():
        best, best_score = -1, -1
        for x in range(N):
            if alpha[x] is not None:
                continue
            score = 0
            for a in assigned:
                if rbrk[x][a] != 0 or rbrk[a][x] != 0:
                    score += 1
            if score > best_score:
                best, best_score = x, score
        return best

    def search():
        if len(assigned) == N:
            yield tuple(alpha)
            return
        x = pick_next()
        for y in range(N):
            if used[y]:
                continue
            alpha[x] = y
            used[y] = True
            assigned.append(x)
            trail = [x]
            if propagate(len(assigned) - 1, trail):
                yield from search()
            undo(trail)

    def propagate(qi, trail):
        while qi < len(assigned):
            x = assigned[qi]
            qi += 1
            ax = alpha[x]
            for a in list(assigned):
                aa = alpha[a]
                for c, t in (
                    (rbrk[x][a], sbrk[ax][aa]),
                    (rbrk[a][x], sbrk[aa][ax]),
                ):
                    ac = alpha[c]
                    if ac is None:
                        if used[t]:
                            return False
                        alpha[c] = t
                        used[t] = True
                        assigned.append(c)
                        trail.append(c)
                    elif ac != t:
                        return False
        return True

    yield from search()


def verify_bijection(r: FiniteLieRing, s: FiniteLieRing, alpha) -> bool:
    """Full pairwise check that alpha preserves commutators."""
    N = r.order
    return all(
        alpha[r.bracket[a][b]] == s.bracket[alpha[a]][alpha[b]]
        for a in range(N)
        for b in range(N)
    )


def _additivity_witness(r: FiniteLieRing, s: FiniteLieRing, alpha):
    """First pair (a,b) with alpha(a+b) != alpha(a)+alpha(b), or None."""
    N = r.order
    for a in range(N):
        for b in range(N):
            if alpha[r.add[a][b]] != s.add[alpha[a]][alpha[b]]:
                return (a, b)
    return None


def commutator_bijections(r: FiniteLieRing, s: FiniteLieRing | None = None,
                          limit: int = 4):
    """Count all commutator-preserving bijections r -> s; keep ``limit`` tables."""
    if s is None:
        s = r
    if r.order != s.order:
        raise OrderMismatch(f"orders differ: {r.order} vs {s.order}")
    if r.order > ENUM_CAP:
        raise TooLarge(f"enumeration capped at order {ENUM_CAP}")
    count = 0
    samples = []
    for alpha in _enumerate_bijections(r, s):
        count += 1
        if len(samples) < limit:
            samples.append(list(alpha))
    return count, samples


def naive_commutator_bijections(r: FiniteLieRing, s: FiniteLieRing | None = None) -> int:
    """Oracle: filter all (N-1)! zero-fixing permutations. Keep N small."""
    from itertools import permutations

    if s is None:
        s = r
    if r.order != s.order:
        raise OrderMismatch(f"orders differ: {r.order} vs {s.order}")
    N = r.order
    count = 0
    for perm in permutations(range(1, N)):
        alpha = (0,) + perm
        if verify_bijection(r, s, alpha):
            count += 1
    return count


def is_wua(r: FiniteLieRing):
    """True iff every commutator-preserving self-bijection is additive.

    A failure is witnessed by the offending map together with a pair (a,b)
    where alpha(a+b) != alpha(a)+alpha(b).
    """
    if r.order > ENUM_CAP:
        raise TooLarge(f"enumeration capped at order {ENUM_CAP}")
    for alpha in _enumerate_bijections(r, r):
        w = _additivity_witness(r, r, alpha)
        if w is not None:
            return False, {"map": list(alpha), "pair": list(w)}
    return True, None


def ua_against(r: FiniteLieRing, s: FiniteLieRing):
    """Test r against one explicit target ring.

    False certifies r is not a UA-ring (a commutator-preserving non-additive
    bijection onto s exists); True only says this particular target yields
    no counterexample.
    """
    if r.order != s.order:
        raise OrderMismatch(f"orders differ: {r.order} vs {s.order}")
    if r.order > ENUM_CAP:
        raise TooLarge(f"enumeration capped at order {ENUM_CAP}")
    count = 0
    for alpha in _enumerate_bijections(r, s):
        count += 1
        w = _additivity_witness(r, s, alpha)
        if w is not None:
            return False, {"bijections_seen": count, "map": list(alpha), "pair": list(w)}
    return True, {"bijections_seen": count, "map": None, "pair": None}


# ---------------------------------------------------------------------------
# the constructive swap on tables


@dataclass
class FiniteNegativeReport:
    case: int
    table: list  # the permutation
    obligations: list  # [(text, bool)]
    witness: dict  # {"c":..., "lhs":..., "rhs":...}
    commutator_scan_ok: bool


def negative_bijection_finite(r: FiniteLieRing) -> FiniteNegativeReport:
    """The swap bijection when the negative-criterion hypotheses hold.

    Works on tables of any size (no enumeration involved): picks the swap
    pair by smallest labels per the applicable case, verifies the bracket
    obligations and full commutator preservation by an N x N scan, and
    exhibits a non-additivity witness.
    """
    N = r.order
    derived = r.derived_elements()
    center = r.center_elements()
    problems = []
    if N <= 4:
        problems.append(f"only {N} elements (need more than 4)")
    if len(derived) == N:
        problems.append("derived subring is everything")
    if center == {0}:
        problems.append("center is zero")
    zd = center & derived
    if zd == {0} and len(center) <= 2:
        problems.append("center meets derived trivially but has at most 2 elements")
    if problems:
        raise HypothesesNotMet("; ".join(problems))

    if derived == {0}:
        case = 1
        u, v = 1, 2
        obligations = [
            ("all commutators vanish", all(
                r.bracket[a][b] == 0 for a in range(N) for b in range(N))),
            ("u, v distinct and nonzero", 0 not in (u, v) and u != v),
        ]
    elif zd == {0}:
        case = 2
        a = min(x for x in derived if x != 0)
        zs = sorted(z for z in center if z != 0)
        z1, z2 = zs[0], zs[1]
        u, v = r.add[a][z1], r.add[a][z2]
        obligations = _finite_swap_obligations(r, derived, u, v)
    else:
        case = 3
        z = min(x for x in zd if x != 0)
        u = min(x for x in range(N) if x not in derived)
        v = r.add[u][z]
        obligations = _finite_swap_obligations(r, derived, u, v)

    if not all(ok for _, ok in obligations):
        raise HypothesesNotMet(f"swap obligations failed: {obligations}")

    table = list(range(N))
    table[u], table[v] = v, u
    scan_ok = verify_bijection(r, r, table)

    excluded = {0, u, v, r.sub(v, u)}
    c = min(x for x in range(N) if x not in excluded)
    lhs = table[r.add[u][c]]
    rhs = r.add[table[u]][table[c]]
    witness = {"u": u, "c": c, "alpha(u+c)": lhs, "alpha(u)+alpha(c)": rhs}
    if lhs == rhs:
        raise HypothesesNotMet("non-additivity witness failed")
    return FiniteNegativeReport(case, table, obligations, witness, scan_ok)


def _finite_swap_obligations(r: FiniteLieRing, derived, u, v):
    N = r.order
    return [
        ("u outside the derived subring", u not in derived),
        ("v outside the derived subring", v not in derived),
        ("[u, x] = [v, x] for every x", all(
            r.bracket[u][x] == r.bracket[v][x] for x in range(N))),
        ("[u, v] = 0", r.bracket[u][v] == 0),
        ("u != v", u != v),
    ]


# ---------------------------------------------------------------------------
# multiplicative semigroup automorphisms of F_q


@dataclass
class SemigroupAutReport:
    q: int
    p: int
    n: int
    brute_count: int
    phi_q_minus_1: int
    field_aut_count: int
    additive_count: int
    nonadditive: dict | None  # {"k":..., "pair":[a,b], "lhs":..., "rhs":...}


def semigroup_aut_report(p: int, n: int) -> SemigroupAutReport:
    """Count multiplication-preserving self-bijections of F_q fixing 0 and 1.

    Such a map restricts to an automorphism of the cyclic unit group, so it
    is determined by the image of a fixed multiplicative generator g; the
    brute force tries all q-1 candidate images and keeps those of full
    multiplicative order.  The count must come out as Euler's phi(q-1),
    which is computed independently by a gcd scan.  Additivity of each
    surviving power map x -> x^k is tested exhaustively; for q > 4 the
    smallest non-additive exponent is returned with a violating pair.
    """
    from .scalars import ExtensionField, PrimeField

    q = p**n
    if q > SEMIGROUP_CAP:
        raise CapExceeded(f"field order {q} exceeds cap {SEMIGROUP_CAP}")
    F = PrimeField(p) if n == 1 else ExtensionField(p, n)
    elements = list(F.elements())
    units = [e for e in elements if not F.is_zero(e)]

    gen = None
    for e in units:
        power = e
        order = 1
        while not _is_one(F, power):
            power = F.mul(power, e)
            order += 1
            if order > q - 1:
                break
        if order == q - 1:
            gen = e
            break
    if gen is None:  # q = 1 cannot happen; unit group of a field is cyclic
        raise HypothesesNotMet("no multiplicative generator found")

    powers = [F.one]
    for _ in range(q - 2):
        powers.append(F.mul(powers[-1], gen))

    brute_exponents = []
    for k in range(1, q):
        img = powers[(k % (q - 1))] if q > 2 else F.one
        seen = set()
        power = F.one
        full_order = True
        for step in range(q - 1):
            if power in seen:
                full_order = False
                break
            seen.add(power)
            power = F.mul(power, img)
        if full_order and len(seen) == q - 1:
            brute_exponents.append(k)
    brute_count = len(brute_exponents)
    phi = sum(1 for k in range(1, q) if math.gcd(k, q - 1) == 1) if q > 1 else 0

    def power_map(k):
        table = {F.zero: F.zero}
        for i in range(q - 1):
            table[powers[i]] = powers[(i * k) % (q - 1)]
        return table

    def additivity_violation(table):
        for a in elements:
            for b in elements:
                lhs = table[F.add(a, b)]
                rhs = F.add(table[a], table[b])
                if lhs != rhs:
                    return (a, b, lhs, rhs)
        return None

    additive_count = 0
    nonadditive = None
    for k in sorted(brute_exponents):
        table = power_map(k)
        viol = additivity_violation(table)
        if viol is None:
            additive_count += 1
        elif nonadditive is None:
            a, b, lhs, rhs = viol
            nonadditive = {
                "k": k,
                "pair": [F.format(a), F.format(b)],
                "alpha(a+b)": F.format(lhs),
                "alpha(a)+alpha(b)": F.format(rhs),
            }
    return SemigroupAutReport(q, p, n, brute_count, phi, n, additive_count, nonadditive)


def _is_one(F, x) -> bool:
    return F.is_zero(F.sub(x, F.one))
