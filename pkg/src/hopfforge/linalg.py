"""Exact rational linear algebra on labelled finite-dimensional spaces.

Everything downstream represents structure maps as matrices over Q
(``fractions.Fraction``), so equality of diagrams is literal entrywise
equality -- no tolerances anywhere.

Conventions:

* column j of a ``LinMap`` is the image of the j-th domain basis vector;
* tensor products use the row-major index pairing e_i (x) e_j  ->  i*dim(W)+j,
  flattened strictly across iterated products;
* two spaces are equal iff they have the same tuple of atomic factors with
  the same labels, so H (x) H built twice compares equal, while a space that
  merely has the same dimension does not.

Large structural maps (e.g. id (x) R (x) id on a fourth tensor power) must
never be materialised; ``composite_map`` evaluates a whole pipeline of
tensor stages column by column on sparse vectors instead.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .errors import ClosureFailure, DimensionMismatch

_ZERO = Fraction(0)
_ONE = Fraction(1)

# Above this cell count a matrix is stored sparse no matter what the density
# heuristic says; a dense 46656 x 46656 tuple-of-rows would be gigabytes.
_DENSE_CELL_LIMIT = 1_048_576


def rat(x) -> Fraction:
    """Coerce int / str / Fraction to Fraction; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Space:
    """A based vector space over Q with distinct basis labels.

    Atomic spaces carry an explicit label tuple.  Tensor products keep the
    flattened tuple of atomic factors and synthesise labels lazily, so a
    216^4-dimensional intermediate never allocates its label list.
    """

    __slots__ = ("dim", "_labels", "_factors")

    def __init__(self, labels=None, *, _factors=None):
        if _factors is not None:
            self._factors = tuple(_factors)
            self._labels = None
            d = 1
            for f in self._factors:
                d *= f.dim
            self.dim = d
        else:
            lab = tuple(str(s) for s in labels)
            if len(set(lab)) != len(lab):
                raise ValueError("basis labels must be distinct")
            if not lab:
                raise ValueError("zero-dimensional spaces are not supported")
            self._labels = lab
            self._factors = None
            self.dim = len(lab)

    def factors(self) -> tuple:
        return (self,) if self._factors is None else self._factors

    def _atoms(self) -> tuple:
        return tuple(f._labels for f in self.factors())

    def label(self, i: int) -> str:
        if self._labels is not None:
            return self._labels[i]
        parts = []
        for f in reversed(self._factors):
            i, r = divmod(i, f.dim)
            parts.append(f._labels[r])
        return "⊗".join(reversed(parts))

    @property
    def labels(self) -> tuple:
        if self._labels is None:
            if self.dim > _DENSE_CELL_LIMIT:
                raise MemoryError(f"refusing to materialise {self.dim} labels")
            self._labels = tuple(self.label(i) for i in range(self.dim))
        return self._labels

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Space):
            return NotImplemented
        return self.dim == other.dim and self._atoms() == other._atoms()

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash((self.dim, len(self.factors())))

    def __repr__(self):
        if self._factors is not None:
            return "(x)".join(repr(f) for f in self._factors)
        if self.dim <= 4:
            return f"Space[{','.join(self._labels)}]"
        return f"Space(dim={self.dim})"


#: the base field Q viewed as the unit object; label "1" matches the unit
#: basis vector of a trivial group algebra.
SCALAR = Space(("1",))


def tensor_space(*spaces: Space) -> Space:
    atoms = []
    for s in spaces:
        atoms.extend(s.factors())
    if not atoms:
        return SCALAR
    if len(atoms) == 1:
        return atoms[0]
    return Space(_factors=atoms)


def _decode(idx: int, dims) -> list:
    out = []
    for d in reversed(dims):
        idx, r = divmod(idx, d)
        out.append(r)
    out.reverse()
    return out


def _encode(coords, dims) -> int:
    idx = 0
    for c, d in zip(coords, dims):
        idx = idx * d + c
    return idx


def _auto_storage(nrows: int, ncols: int, nnz: int) -> str:
    cells = nrows * ncols
    if cells > _DENSE_CELL_LIMIT:
        return "sparse"
    if max(nrows, ncols) > 32 and nnz * 10 < cells:
        return "sparse"
    return "dense"


class LinMap:
    """Exact linear map between two spaces.

    Storage is either 'dense' (tuple of row tuples) or 'sparse'
    (dict column -> {row: value}, zero entries omitted).  Every operation
    produces identical entries regardless of storage; the flag only picks
    the representation of the result (spec'd heuristic: sparse once the
    matrix is bigger than 32 and under 10% full).
    """

    __slots__ = ("dom", "cod", "storage", "_cols", "_dense")

    def __init__(self, dom: Space, cod: Space, cols: dict, storage: str = "auto"):
        self.dom = dom
        self.cod = cod
        clean = {}
        nnz = 0
        for j, col in cols.items():
            c = {i: (v if isinstance(v, Fraction) else rat(v))
                 for i, v in col.items() if v}
            if c:
                clean[j] = c
                nnz += len(c)
        if storage == "auto":
            storage = _auto_storage(cod.dim, dom.dim, nnz)
        if storage == "dense":
            rows = [[_ZERO] * dom.dim for _ in range(cod.dim)]
            for j, col in clean.items():
                for i, v in col.items():
                    rows[i][j] = v
            self._dense = tuple(tuple(r) for r in rows)
            self._cols = None
        elif storage == "sparse":
            self._dense = None
            self._cols = clean
        else:
            raise ValueError(f"unknown storage {storage!r}")
        self.storage = storage

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rows(cls, dom: Space, cod: Space, rows, storage: str = "auto") -> "LinMap":
        rows = [list(r) for r in rows]
        if len(rows) != cod.dim or any(len(r) != dom.dim for r in rows):
            raise DimensionMismatch(
                f"matrix is {len(rows)}x{len(rows[0]) if rows else 0}, "
                f"expected {cod.dim}x{dom.dim}")
        cols: dict = {}
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                v = rat(x)
                if v:
                    cols.setdefault(j, {})[i] = v
        return cls(dom, cod, cols, storage)

    @classmethod
    def from_entries(cls, dom: Space, cod: Space, entries: dict, storage: str = "auto") -> "LinMap":
        cols: dict = {}
        for (i, j), x in entries.items():
            v = rat(x)
            if v:
                cols.setdefault(j, {})[i] = v
        return cls(dom, cod, cols, storage)

    @classmethod
    def identity(cls, space: Space, storage: str = "auto") -> "LinMap":
        return cls(space, space, {j: {j: _ONE} for j in range(space.dim)}, storage)

    @classmethod
    def zero(cls, dom: Space, cod: Space, storage: str = "auto") -> "LinMap":
        return cls(dom, cod, {}, storage)

    # -- access -------------------------------------------------------

    def column(self, j: int) -> dict:
        """Column as {row: value}; treat the result as read-only."""
        if self._cols is not None:
            return self._cols.get(j, {})
        return {i: row[j] for i, row in enumerate(self._dense) if row[j]}

    def entry(self, i: int, j: int) -> Fraction:
        if self._dense is not None:
            return self._dense[i][j]
        return self._cols.get(j, {}).get(i, _ZERO)

    def items(self):
        """Iterate nonzero entries as (row, col, value)."""
        if self._cols is not None:
            for j, col in self._cols.items():
                for i, v in col.items():
                    yield i, j, v
        else:
            for i, row in enumerate(self._dense):
                for j, v in enumerate(row):
                    if v:
                        yield i, j, v

    @property
    def nnz(self) -> int:
        return sum(1 for _ in self.items())

    def to_rows(self):
        if self.cod.dim * self.dom.dim > _DENSE_CELL_LIMIT:
            raise MemoryError("matrix too large to densify")
        if self._dense is not None:
            return [list(r) for r in self._dense]
        rows = [[_ZERO] * self.dom.dim for _ in range(self.cod.dim)]
        for i, j, v in self.items():
            rows[i][j] = v
        return rows

    def with_storage(self, storage: str) -> "LinMap":
        if storage == self.storage:
            return self
        cols: dict = {}
        for i, j, v in self.items():
            cols.setdefault(j, {})[i] = v
        return LinMap(self.dom, self.cod, cols, storage)

    def _col_dict(self) -> dict:
        if self._cols is not None:
            return self._cols
        cols: dict = {}
        for i, j, v in self.items():
            cols.setdefault(j, {})[i] = v
        return cols

    # -- algebra ------------------------------------------------------

    def apply(self, vec: dict) -> dict:
        """Apply to a sparse column vector {index: value}."""
        out: dict = {}
        for j, v in vec.items():
            for i, w in self.column(j).items():
                nv = out.get(i, _ZERO) + v * w
                if nv:
                    out[i] = nv
                elif i in out:
                    del out[i]
        return out

    def __matmul__(self, other: "LinMap") -> "LinMap":
        if not isinstance(other, LinMap):
            return NotImplemented
        if other.cod != self.dom:
            raise DimensionMismatch(
                f"compose: inner spaces differ ({other.cod!r} vs {self.dom!r})")
        cols = {}
        for j in (other._cols if other._cols is not None else range(other.dom.dim)):
            c = self.apply(other.column(j))
            if c:
                cols[j] = c
        return LinMap(other.dom, self.cod, cols)

    def tensor(self, other: "LinMap") -> "LinMap":
        dom = tensor_space(self.dom, other.dom)
        cod = tensor_space(self.cod, other.cod)
        oc, od = other.cod.dim, other.dom.dim
        cols: dict = {}
        for j1, col1 in self._col_dict().items():
            for j2, col2 in other._col_dict().items():
                dst = cols.setdefault(j1 * od + j2, {})
                for i1, v1 in col1.items():
                    base = i1 * oc
                    for i2, v2 in col2.items():
                        dst[base + i2] = v1 * v2
        return LinMap(dom, cod, cols)

    def _require_same_shape(self, other: "LinMap"):
        if self.dom != other.dom or self.cod != other.cod:
            raise DimensionMismatch("maps have different shapes")

    def __add__(self, other: "LinMap") -> "LinMap":
        self._require_same_shape(other)
        cols = {j: dict(col) for j, col in self._col_dict().items()}
        for i, j, v in other.items():
            dst = cols.setdefault(j, {})
            nv = dst.get(i, _ZERO) + v
            if nv:
                dst[i] = nv
            else:
                del dst[i]
        return LinMap(self.dom, self.cod, cols)

    def __neg__(self) -> "LinMap":
        return LinMap(self.dom, self.cod,
                      {j: {i: -v for i, v in col.items()}
                       for j, col in self._col_dict().items()})

    def __sub__(self, other: "LinMap") -> "LinMap":
        return self + (-other)

    def __rmul__(self, scalar) -> "LinMap":
        s = rat(scalar)
        if not s:
            return LinMap.zero(self.dom, self.cod)
        return LinMap(self.dom, self.cod,
                      {j: {i: s * v for i, v in col.items()}
                       for j, col in self._col_dict().items()})

    def is_zero(self) -> bool:
        return next(iter(self.items()), None) is None

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        if self.dom != other.dom or self.cod != other.cod:
            return False
        return self.first_difference(other) is None

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    __hash__ = None

    def first_difference(self, other: "LinMap"):
        """First differing entry scanning columns then rows, or None.

        Returns (row, col, self_value, other_value).  This is the witness
        order used by every checker: the column index is the domain basis
        vector on which the two sides of a law first disagree.
        """
        a, b = self._col_dict(), other._col_dict()
        for j in sorted(set(a) | set(b)):
            ca, cb = a.get(j, {}), b.get(j, {})
            if ca == cb:
                continue
            for i in sorted(set(ca) | set(cb)):
                va, vb = ca.get(i, _ZERO), cb.get(i, _ZERO)
                if va != vb:
                    return i, j, va, vb
        return None

    def __repr__(self):
        return f"LinMap({self.dom.dim}->{self.cod.dim}, nnz={self.nnz}, {self.storage})"


def compose(f: LinMap, g: LinMap) -> LinMap:
    """f after g."""
    return f @ g


def tensor_map(f: LinMap, g: LinMap) -> LinMap:
    return f.tensor(g)


def iso_map(dom: Space, cod: Space) -> LinMap:
    """Identity-entry map between equal-dimension spaces (unitors etc.)."""
    if dom.dim != cod.dim:
        raise DimensionMismatch("iso_map needs equal dimensions")
    return LinMap(dom, cod, {j: {j: _ONE} for j in range(dom.dim)})


def left_unitor(v: Space) -> LinMap:
    """V -> k (x) V."""
    return iso_map(v, tensor_space(SCALAR, v))


def right_unitor(v: Space) -> LinMap:
    """V -> V (x) k."""
    return iso_map(v, tensor_space(v, SCALAR))


def flip(v: Space, w: Space) -> LinMap:
    """The symmetry v (x) w -> w (x) v of Vect."""
    dom = tensor_space(v, w)
    cod = tensor_space(w, v)
    cols = {}
    for i in range(v.dim):
        base = i * w.dim
        for j in range(w.dim):
            cols[base + j] = {j * v.dim + i: _ONE}
    return LinMap(dom, cod, cols)


# -- column-wise evaluation of big composites -------------------------


def _stage_parts(stage):
    """Normalise one tensor stage to [(in_dim, out_dim, map_or_None)]."""
    parts = []
    for p in stage:
        if isinstance(p, Space):
            parts.append((p.dim, p.dim, None))
        elif isinstance(p, LinMap):
            parts.append((p.dom.dim, p.cod.dim, p))
        else:
            raise TypeError(f"bad tensor-stage part {p!r}")
    return parts


def _apply_tensor_stage(parts, vec: dict) -> dict:
    in_dims = [p[0] for p in parts]
    out_dims = [p[1] for p in parts]
    out: dict = {}
    for idx, v in vec.items():
        coords = _decode(idx, in_dims)
        factor_terms = []
        dead = False
        for (indim, outdim, m), c in zip(parts, coords):
            if m is None:
                factor_terms.append(((c, _ONE),))
            else:
                col = m.column(c)
                if not col:
                    dead = True
                    break
                factor_terms.append(tuple(col.items()))
        if dead:
            continue
        for combo in itertools.product(*factor_terms):
            w = v
            for _, cv in combo:
                w = w * cv
            o = _encode([t[0] for t in combo], out_dims)
            nv = out.get(o, _ZERO) + w
            if nv:
                out[o] = nv
            elif o in out:
                del out[o]
    return out


def composite_map(dom: Space, cod: Space, stages) -> LinMap:
    """Evaluate a pipeline of stages on each domain basis vector.

    Each stage is either a LinMap (applied directly) or a list of tensor
    parts, where a part is a LinMap or a Space (identity on that factor).
    Stages apply left to right, so ``[f, g]`` is the composite g . f.
    Intermediate spaces are never constructed -- only index arithmetic --
    which keeps laws like (mul x mul).(id x R x id).(comul x comul)
    tractable on large group algebras.
    """
    prepared = []
    for st in stages:
        if isinstance(st, LinMap):
            prepared.append(("m", st))
        else:
            prepared.append(("t", _stage_parts(st)))
    cols = {}
    for j in range(dom.dim):
        vec = {j: _ONE}
        for kind, st in prepared:
            vec = st.apply(vec) if kind == "m" else _apply_tensor_stage(st, vec)
            if not vec:
                break
        if vec:
            if max(vec) >= cod.dim:
                raise DimensionMismatch("composite lands outside codomain")
            cols[j] = vec
    return LinMap(dom, cod, cols)


# -- elimination ------------------------------------------------------


class RowReducer:
    """RREF of a matrix with the reducing transform, built once.

    Rows live as sparse dicts; a column->rows occupancy index keeps
    elimination near-linear for the permutation-like matrices that
    group-algebra structure maps produce.
    """

    def __init__(self, rows, ncols: int):
        self.ncols = ncols
        self.nrows = len(rows)
        R = [dict(r) for r in rows]
        T = [{i: _ONE} for i in range(self.nrows)]
        occ: dict = {}
        for ri, row in enumerate(R):
            for c in row:
                occ.setdefault(c, set()).add(ri)

        def axpy(dst_idx, src_idx, factor, track):
            dst, src = (R[dst_idx], R[src_idx]) if track else (T[dst_idx], T[src_idx])
            for c, v in src.items():
                nv = dst.get(c, _ZERO) - factor * v
                if nv:
                    if track and c not in dst:
                        occ.setdefault(c, set()).add(dst_idx)
                    dst[c] = nv
                else:
                    if c in dst:
                        del dst[c]
                        if track:
                            occ[c].discard(dst_idx)

        pivots = []
        in_pivot = set()
        for col in range(ncols):
            rows_here = occ.get(col)
            if not rows_here:
                continue
            cand = [r for r in rows_here if r not in in_pivot]
            if not cand:
                continue
            pr = min(cand)
            pv = R[pr][col]
            if pv != 1:
                inv = _ONE / pv
                R[pr] = {c: inv * v for c, v in R[pr].items()}
                T[pr] = {c: inv * v for c, v in T[pr].items()}
            for r in list(rows_here):
                if r == pr:
                    continue
                factor = R[r][col]
                axpy(r, pr, factor, True)
                axpy(r, pr, factor, False)
            pivots.append((pr, col))
            in_pivot.add(pr)
        self.R, self.T, self.pivots = R, T, pivots
        self._pivot_rows = in_pivot

    @classmethod
    def of_map(cls, m: LinMap) -> "RowReducer":
        rows = [dict() for _ in range(m.cod.dim)]
        for i, j, v in m.items():
            rows[i][j] = v
        return cls(rows, m.dom.dim)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def solve_vec(self, b: dict):
        """One solution x of Ax=b with free coordinates 0, or None."""
        y = {}
        for r in range(self.nrows):
            acc = _ZERO
            tr = self.T[r]
            if len(tr) < len(b):
                for c, v in tr.items():
                    if c in b:
                        acc += v * b[c]
            else:
                for c, v in b.items():
                    if c in tr:
                        acc += tr[c] * v
            if acc:
                y[r] = acc
        x = {}
        for pr, pc in self.pivots:
            if pr in y:
                x[pc] = y.pop(pr)
        if y:
            return None  # inconsistent rows remain
        return x

    def kernel_columns(self):
        """Deterministic kernel basis: each vector has +1 leading entry."""
        pivot_cols = {pc for _, pc in self.pivots}
        out = []
        for fc in range(self.ncols):
            if fc in pivot_cols:
                continue
            vec = {fc: _ONE}
            for pr, pc in self.pivots:
                v = self.R[pr].get(fc)
                if v:
                    vec[pc] = -v
            lead = min(vec)
            lv = vec[lead]
            if lv != 1:
                vec = {c: v / lv for c, v in vec.items()}
            out.append((lead, fc, vec))
        out.sort(key=lambda t: (t[0], t[1]))
        return [vec for _, _, vec in out]


def rank(m: LinMap) -> int:
    return RowReducer.of_map(m).rank


def solve(a: LinMap, b: LinMap):
    """X with a @ X == b (free coordinates zero), or None if unsolvable."""
    if a.cod != b.cod:
        raise DimensionMismatch("solve: codomains differ")
    red = RowReducer.of_map(a)
    cols = {}
    for j in range(b.dom.dim):
        col = b.column(j)
        if not col:
            continue
        x = red.solve_vec(col)
        if x is None:
            return None
        if x:
            cols[j] = x
    return LinMap(b.dom, a.dom, cols)


def try_inverse(m: LinMap):
    """Exact inverse, or None when singular (or not square)."""
    if m.dom.dim != m.cod.dim:
        return None
    red = RowReducer.of_map(m)
    if red.rank != m.dom.dim:
        return None
    return solve(m, LinMap.identity(m.cod))


class Subspace:
    """A subspace given by its inclusion into an ambient space.

    The carrier gets its own Space: a basis column that is a plain unit
    vector inherits the ambient label, anything else is named b0, b1, ...
    in basis order.
    """

    def __init__(self, ambient: Space, columns, name: str = "sub",
                 carrier: Space = None):
        self.ambient = ambient
        cols = [{i: rat(v) for i, v in c.items() if v} for c in columns]
        if carrier is not None and carrier.dim != len(cols):
            raise DimensionMismatch("subspace carrier has the wrong dimension")
        labels = []
        for k, c in enumerate(cols):
            if len(c) == 1:
                ((i, v),) = c.items()
                if v == 1:
                    labels.append(ambient.label(i))
                    continue
            labels.append(f"{name}{k}")
        if cols:
            self.space = carrier if carrier is not None else Space(labels)
            self.inclusion = LinMap(self.space, ambient,
                                    {j: c for j, c in enumerate(cols)})
            self._reducer = RowReducer.of_map(self.inclusion)
            if self._reducer.rank != len(cols):
                raise ValueError("subspace columns are dependent")
        else:
            # dim-0 subspaces do not occur for the objects we build (every
            # kernel of interest contains the unit); keep a marker anyway
            self.space = None
            self.inclusion = None
            self._reducer = None

    @property
    def dim(self) -> int:
        return 0 if self.space is None else self.space.dim

    def contains_vector(self, vec: dict) -> bool:
        if not vec:
            return True
        if self._reducer is None:
            return False
        return self._reducer.solve_vec(vec) is not None

    def corestrict(self, m: LinMap, what: str = "map") -> LinMap:
        """Rewrite m: X -> ambient as X -> carrier; ClosureFailure if it escapes."""
        if m.cod != self.ambient:
            raise DimensionMismatch("corestrict: codomain is not the ambient space")
        cols = {}
        for j in range(m.dom.dim):
            col = m.column(j)
            if not col:
                continue
            x = self._reducer.solve_vec(col)
            if x is None:
                raise ClosureFailure(
                    f"{what}: image of basis vector {m.dom.label(j)!r} "
                    f"is not in the subspace")
            if x:
                cols[j] = x
        return LinMap(m.dom, self.space, cols)

    def contains_map_image(self, m: LinMap) -> bool:
        try:
            self.corestrict(m)
            return True
        except ClosureFailure:
            return False

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.dim == 0:
            return True
        if self.dim == 0:
            return False
        return self.contains_map_image(other.inclusion)

    def equals(self, other: "Subspace") -> bool:
        return (self.dim == other.dim and self.contains_subspace(other)
                and other.contains_subspace(self))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient!r})"


def kernel_basis(m: LinMap) -> Subspace:
    """ker(m) as a Subspace of dom(m), deterministic reduced basis."""
    red = RowReducer.of_map(m)
    return Subspace(m.dom, red.kernel_columns())


def full_subspace(space: Space) -> Subspace:
    """The whole space viewed as a subspace of itself (identity inclusion)."""
    return Subspace(space, [{i: Fraction(1)} for i in range(space.dim)],
                    carrier=space)


def tensor_subspace(a: Subspace, b: Subspace) -> Subspace:
    """a (x) b inside ambient(a) (x) ambient(b), carrier = tensor of carriers.

    Basis order is a-major, matching tensor_space index encoding, so
    corestricting into the result lines up with maps into the carriers'
    tensor space.
    """
    ambient = tensor_space(a.ambient, b.ambient)
    nb = b.ambient.dim
    cols = []
    for i in range(a.dim):
        ca = a.inclusion.column(i)
        for j in range(b.dim):
            cb = b.inclusion.column(j)
            cols.append({ra * nb + rb: va * vb
                         for ra, va in ca.items() for rb, vb in cb.items()})
    return Subspace(ambient, cols, carrier=tensor_space(a.space, b.space))
