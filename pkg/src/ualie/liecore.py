"""Lie algebras presented by structure constants over an exact field.

An algebra stores only the brackets [e_i, e_j] for i < j as sparse
coefficient rows; antisymmetry supplies the rest, so alternation holds by
construction and validation reduces to the Jacobi identity, which is checked
exhaustively over all basis triples.  Elements are plain coordinate lists of
raw scalars in the algebra's field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import DimensionMismatch, InvalidStructure
from .linalg import Matrix, Subspace, kernel, kernel_dim_fast
from .scalars import field_from_json


@dataclass
class ValidationReport:
    ok: bool
    jacobi_failures: list  # [(i, j, k, defect coordinate list)]

    def first_failure(self):
        return self.jacobi_failures[0] if self.jacobi_failures else None


@dataclass
class SeriesResult:
    kind: str  # "derived" | "lower_central"
    subspaces: list  # strictly decreasing chain, starts at the full algebra
    reaches_zero: bool

    @property
    def dims(self):
        return tuple(s.dim for s in self.subspaces)


class StructureConstantAlgebra:
    """Finite-dimensional Lie algebra given by sparse structure constants.

    ``brackets`` maps (i, j) with i < j to {k: coefficient}; zero
    coefficients are dropped at construction.
    """

    def __init__(self, name, field, dim, basis_names=None, brackets=None):
        self.name = name
        self.field = field
        self.dim = dim
        if basis_names is None:
            basis_names = [f"e{i + 1}" for i in range(dim)]
        if len(basis_names) != dim:
            raise DimensionMismatch("basis_names length must equal dim")
        self.basis_names = list(basis_names)
        clean = {}
        for (i, j), row in (brackets or {}).items():
            if not (0 <= i < j < dim):
                raise InvalidStructure(f"bracket key ({i},{j}) must satisfy 0 <= i < j < dim")
            crow = {}
            for k, c in row.items():
                if not 0 <= k < dim:
                    raise InvalidStructure(f"bracket ({i},{j}) hits invalid index {k}")
                if not field.is_zero(c):
                    crow[k] = c
            if crow:
                clean[(i, j)] = crow
        self.brackets = clean
        self._basis_ads = None

    # -- elements ---------------------------------------------------------

    def zero_vector(self):
        return [self.field.zero] * self.dim

    def basis_vector(self, i):
        v = self.zero_vector()
        v[i] = self.field.one
        return v

    def parse_element(self, strings):
        if len(strings) != self.dim:
            raise DimensionMismatch(f"element needs {self.dim} coordinates")
        return [self.field.parse(s) for s in strings]

    def format_element(self, v):
        return [self.field.format(x) for x in v]

    # -- bracket ----------------------------------------------------------

    def _pair_row(self, i, j):
        """Sparse row of [e_i, e_j] with antisymmetry applied; None if zero."""
        if i == j:
            return None
        if i < j:
            return self.brackets.get((i, j))
        row = self.brackets.get((j, i))
        if row is None:
            return None
        F = self.field
        return {k: F.neg(c) for k, c in row.items()}

    def bracket(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("element has wrong length")
        F = self.field
        out = [F.zero] * self.dim
        for (i, j), row in self.brackets.items():
            c = F.sub(F.mul(x[i], y[j]), F.mul(x[j], y[i]))
            if not F.is_zero(c):
                for k, s in row.items():
                    out[k] = F.add(out[k], F.mul(c, s))
        return out

    def _bracket_basis_sparse(self, i, d):
        """[e_i, v] for sparse v given as {index: coeff}, returned sparse."""
        F = self.field
        out = {}
        for l, cl in d.items():
            row = self._pair_row(i, l)
            if row is None:
                continue
            for k, s in row.items():
                v = F.add(out.get(k, F.zero), F.mul(cl, s))
                if F.is_zero(v):
                    out.pop(k, None)
                else:
                    out[k] = v
        return out

    # -- adjoint operators and centralizers --------------------------------

    def ad_matrix(self, x) -> Matrix:
        """Matrix of y -> [x, y] in the basis (column j is [x, e_j])."""
        if len(x) != self.dim:
            raise DimensionMismatch("element has wrong length")
        F = self.field
        n = self.dim
        ents = [F.zero] * (n * n)
        for (i, j), row in self.brackets.items():
            xi, xj = x[i], x[j]
            if not F.is_zero(xi):
                for k, s in row.items():
                    ents[k * n + j] = F.add(ents[k * n + j], F.mul(xi, s))
            if not F.is_zero(xj):
                for k, s in row.items():
                    ents[k * n + i] = F.sub(ents[k * n + i], F.mul(xj, s))
        return Matrix(F, n, n, ents)

    def basis_ads(self):
        if self._basis_ads is None:
            self._basis_ads = [self.ad_matrix(self.basis_vector(i)) for i in range(self.dim)]
        return self._basis_ads

    def centralizer(self, x) -> Subspace:
        return kernel(self.ad_matrix(x))

    def center(self) -> Subspace:
        ads = self.basis_ads()
        if self.dim == 0:
            return Subspace.zero(self.field, 0)
        stacked = ads[0]
        for m in ads[1:]:
            stacked = stacked.stack(m)
        return kernel(stacked)

    def mutual_centralizer_dim(self, a, b) -> int:
        """dim (C(a) intersect C(b)) as the nullity of the stacked adjoints."""
        stacked = self.ad_matrix(a).stack(self.ad_matrix(b))
        return kernel_dim_fast(stacked)

    # -- derived structure --------------------------------------------------

    def derived_subalgebra(self) -> Subspace:
        F = self.field
        vecs = []
        for row in self.brackets.values():
            v = [F.zero] * self.dim
            for k, c in row.items():
                v[k] = c
            vecs.append(v)
        return Subspace.from_spanning(F, self.dim, vecs)

    def subspace_bracket(self, u: Subspace, v: Subspace) -> Subspace:
        vecs = []
        for i in range(u.dim):
            ui = u.basis.row(i)
            for j in range(v.dim):
                vecs.append(self.bracket(ui, v.basis.row(j)))
        return Subspace.from_spanning(self.field, self.dim, vecs)

    def series(self, kind: str) -> SeriesResult:
        if kind not in ("derived", "lower_central"):
            raise ValueError("kind must be 'derived' or 'lower_central'")
        full = Subspace.full(self.field, self.dim)
        chain = [full]
        cur = full
        while cur.dim > 0:
            nxt = (
                self.subspace_bracket(cur, cur)
                if kind == "derived"
                else self.subspace_bracket(full, cur)
            )
            if nxt.dim == cur.dim:
                break  # stabilized above zero
            chain.append(nxt)
            cur = nxt
        return SeriesResult(kind, chain, cur.dim == 0)

    def is_solvable(self) -> bool:
        return self.series("derived").reaches_zero

    def is_nilpotent(self) -> bool:
        return self.series("lower_central").reaches_zero

    # -- validation ----------------------------------------------------------

    def validate(self) -> ValidationReport:
        """Exhaustive Jacobi check over all basis triples i < j < k."""
        F = self.field
        failures = []
        n = self.dim
        for j in range(n):
            for k in range(j + 1, n):
                row_jk = self.brackets.get((j, k))
                for i in range(n):
                    if i == j or i == k:
                        continue
                    # order the triple once: only i < j < k
                    if not (i < j):
                        continue
                    acc = {}
                    for idx, d in (
                        (i, row_jk or {}),
                        (j, self._pair_row(k, i) or {}),
                        (k, self._pair_row(i, j) or {}),
                    ):
                        part = self._bracket_basis_sparse(idx, d)
                        for kk, c in part.items():
                            v = F.add(acc.get(kk, F.zero), c)
                            if F.is_zero(v):
                                acc.pop(kk, None)
                            else:
                                acc[kk] = v
                    if acc:
                        defect = [F.zero] * n
                        for kk, c in acc.items():
                            defect[kk] = c
                        failures.append((i, j, k, defect))
        return ValidationReport(not failures, failures)

    # -- structural comparison and serialization -----------------------------

    def same_structure(self, other: "StructureConstantAlgebra") -> bool:
        """Equal field, dimension, and structure constants (names ignored)."""
        if self.field != other.field or self.dim != other.dim:
            return False
        keys = set(self.brackets) | set(other.brackets)
        F = self.field
        for key in keys:
            a = self.brackets.get(key, {})
            b = other.brackets.get(key, {})
            for k in set(a) | set(b):
                if not F.is_zero(F.sub(a.get(k, F.zero), b.get(k, F.zero))):
                    return False
        return True

    def to_json_dict(self) -> dict:
        F = self.field
        items = []
        for (i, j) in sorted(self.brackets):
            row = self.brackets[(i, j)]
            items.append(
                {
                    "i": i,
                    "j": j,
                    "coeffs": {str(k): F.format(row[k]) for k in sorted(row)},
                }
            )
        return {
            "name": self.name,
            "field": F.to_json(),
            "dim": self.dim,
            "basis_names": self.basis_names,
            "brackets": items,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "StructureConstantAlgebra":
        try:
            field = field_from_json(obj["field"])
            dim = int(obj["dim"])
            name = obj.get("name", "algebra")
            basis_names = obj.get("basis_names")
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidStructure(f"malformed algebra file: {e}") from e
        brackets = {}
        for item in obj.get("brackets", []):
            try:
                i, j = int(item["i"]), int(item["j"])
                coeffs = item["coeffs"]
            except (KeyError, TypeError, ValueError) as e:
                raise InvalidStructure(f"malformed bracket entry: {e}") from e
            if i >= j:
                raise InvalidStructure(
                    f"bracket entry has i >= j ({i} >= {j}); store only i < j"
                )
            if (i, j) in brackets:
                raise InvalidStructure(f"duplicate bracket entry for ({i},{j})")
            brackets[(i, j)] = {int(k): field.parse(s) for k, s in coeffs.items()}
        return cls(name, field, dim, basis_names, brackets)

    @classmethod
    def load(cls, path) -> "StructureConstantAlgebra":
        with open(path, "r", encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as e:
                raise InvalidStructure(f"not valid JSON: {e}") from e
        return cls.from_json_dict(obj)

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, indent=2)
            fh.write("\n")

    def __repr__(self):
        return f"<{self.name}: dim {self.dim} over {self.field!r}>"


def validate_structure(g: StructureConstantAlgebra) -> ValidationReport:
    return g.validate()


def mutual_centralizer_dim_generic(g: StructureConstantAlgebra, a, b) -> int:
    """Independent route: intersect the two centralizers as subspaces."""
    return g.centralizer(a).intersect(g.centralizer(b)).dim
