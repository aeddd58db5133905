"""Finite p-groups of the form E acting on its own group algebra.

E is the elementary abelian group F_p^r; it acts on M = F_p[E] by
translating the basis {e^w : w in E}.  Group elements are pairs (u, f)
with u in E and f in M stored as a length-p^r coefficient table, and the
law is (u, f) * (v, g) = (u + v, shift(f, v) + g).

The central series here is computed structurally: each term is a product
set T x W with T a subgroup of E and W a translation-invariant subspace
of M, found by small linear algebra mod p rather than by enumerating
group elements.  (That every term is such a product follows from the
commutator formulas: commutators with module elements constrain only u,
commutators with E-elements constrain only f, and the W's are
translation invariant by induction.)  Enumeration survives only as a
cross-check oracle for tiny cases.
"""

from __future__ import annotations

from itertools import product

from ..scalars import _is_prime

DEFAULT_WORK_BOUND = 200_000
DEFAULT_ALGEBRA_BOUND = 27


# ---------------------------------------------------------------------------
# linear algebra mod p on int tuples


def _rref(rows: list, p: int) -> list:
    """Reduced row echelon form; returns the nonzero rows."""
    rows = [list(r) for r in rows]
    out = []
    ncols = len(rows[0]) if rows else 0
    lead = 0
    for col in range(ncols):
        pivot = next((i for i in range(lead, len(rows)) if rows[i][col] % p), None)
        if pivot is None:
            continue
        rows[lead], rows[pivot] = rows[pivot], rows[lead]
        inv = pow(rows[lead][col], p - 2, p)
        rows[lead] = [(v * inv) % p for v in rows[lead]]
        for i in range(len(rows)):
            if i != lead and rows[i][col] % p:
                c = rows[i][col]
                rows[i] = [(a - c * b) % p for a, b in zip(rows[i], rows[lead])]
        lead += 1
        if lead == len(rows):
            break
    for row in rows[:lead]:
        out.append(tuple(row))
    return out


def _reduce_against(basis: list, vec, p: int):
    """Remainder of vec after elimination by rref basis rows."""
    vec = list(vec)
    for row in basis:
        col = next(i for i, v in enumerate(row) if v)
        if vec[col] % p:
            c = vec[col]
            vec = [(a - c * b) % p for a, b in zip(vec, row)]
    return tuple(v % p for v in vec)


def _in_span(basis: list, vec, p: int) -> bool:
    return not any(_reduce_against(basis, vec, p))


def _kernel(rows: list, ncols: int, p: int) -> list:
    """Basis of {v : A v = 0} for A given by rows of length ncols."""
    basis = _rref(rows, p)
    pivots = []
    for row in basis:
        pivots.append(next(i for i, v in enumerate(row) if v))
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for row, pc in zip(basis, pivots):
            v[pc] = (-row[fc]) % p
        out.append(tuple(v))
    return out


# ---------------------------------------------------------------------------
# the group


class PGroup:
    """The semidirect product of E = F_p^r with its group algebra."""

    def __init__(self, p: int, r: int):
        if not _is_prime(p):
            raise ValueError("not a prime: %d" % p)
        if r < 1:
            raise ValueError("rank must be at least 1")
        self.p = p
        self.r = r
        self.q = p ** r
        self.points = list(product(range(p), repeat=r))
        self.index = {u: i for i, u in enumerate(self.points)}
        self.zero_u = (0,) * r
        self.zero_table = (0,) * self.q
        self._shift_perm = {
            u: tuple(self.index[self._vadd(w, u)] for w in self.points)
            for u in self.points
        }

    # -- E arithmetic ----------------------------------------------------

    def _vadd(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _vneg(self, a):
        return tuple((-x) % self.p for x in a)

    # -- module arithmetic -----------------------------------------------

    def shift(self, table, v):
        """The translation action: e^w -> e^(w+v), applied to a table."""
        perm = self._shift_perm[v]
        out = [0] * self.q
        for i, value in enumerate(table):
            out[perm[i]] = value
        return tuple(out)

    def table_add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def table_neg(self, a):
        return tuple((-x) % self.p for x in a)

    def basis_table(self, w):
        out = [0] * self.q
        out[self.index[w]] = 1
        return tuple(out)

    # -- group law ---------------------------------------------------------

    @property
    def identity(self):
        return (self.zero_u, self.zero_table)

    def mul(self, g, h):
        (u, f), (v, g2) = g, h
        return (self._vadd(u, v), self.table_add(self.shift(f, v), g2))

    def inv(self, g):
        u, f = g
        nu = self._vneg(u)
        return (nu, self.table_neg(self.shift(f, nu)))

    def commutator(self, g, h):
        return self.mul(self.mul(g, h), self.mul(self.inv(g), self.inv(h)))

    def generators(self) -> list:
        gens = []
        for j in range(self.r):
            e_j = tuple(1 if i == j else 0 for i in range(self.r))
            gens.append((e_j, self.zero_table))
        gens.append((self.zero_u, self.basis_table(self.zero_u)))
        return gens

    def elements(self):
        for u in self.points:
            for table in product(range(self.p), repeat=self.q):
                yield (u, table)

    @property
    def order(self) -> int:
        return self.q * self.p ** self.q


def _work_cost(p: int, r: int) -> int:
    q = p ** r
    return q * p ** q


def pgroup_nilpotency_index(p: int, r: int, work_bound: int = DEFAULT_WORK_BOUND) -> int:
    """Length of the ascending central series of the group above,
    computed structurally (each term as a subgroup-of-E times a subspace
    of the module)."""
    if _work_cost(p, r) > work_bound:
        raise ValueError("work bound exceeded for (p, r) = (%d, %d)" % (p, r))
    group = PGroup(p, r)
    q = group.q
    gens_e = [tuple(1 if i == j else 0 for i in range(r)) for j in range(r)]
    basis_tables = [group.basis_table(w) for w in group.points]

    w_basis: list = []      # rref rows spanning the current module part
    t_set = {group.zero_u}  # the current E part
    index = 0
    while True:
        index += 1
        # next module part: tables whose generator-shift differences land
        # in the current one
        constraint_rows = []
        for v in gens_e:
            per_basis = []
            for bt in basis_tables:
                diff = tuple((a - b) % p for a, b in zip(group.shift(bt, v), bt))
                per_basis.append(_reduce_against(w_basis, diff, p))
            for coord in range(q):
                constraint_rows.append([per_basis[col][coord] for col in range(q)])
        new_w = _rref(_kernel(constraint_rows, q, p), p)
        # next E part: u whose shift differences land in the current module part
        new_t = set()
        for u in group.points:
            ok = all(
                _in_span(w_basis,
                         tuple((a - b) % p for a, b in zip(group.shift(bt, u), bt)),
                         p)
                for bt in basis_tables)
            if ok:
                new_t.add(u)
        if len(new_t) == len(t_set) and len(new_w) == len(w_basis):
            raise RuntimeError("central series stalled; the group is not nilpotent")
        t_set, w_basis = new_t, new_w
        if len(t_set) == q and len(w_basis) == q:
            return index


def nilpotency_index_by_enumeration(p: int, r: int, work_bound: int = DEFAULT_WORK_BOUND) -> int:
    """Oracle: the same series length by listing every group element."""
    if _work_cost(p, r) > work_bound:
        raise ValueError("work bound exceeded for (p, r) = (%d, %d)" % (p, r))
    group = PGroup(p, r)
    gens = group.generators()
    all_elements = list(group.elements())
    center = {group.identity}
    index = 0
    while len(center) < group.order:
        index += 1
        center = {
            g for g in all_elements
            if all(group.commutator(g, x) in center for x in gens)
        }
    return index


# ---------------------------------------------------------------------------
# power sums in F_p[x_1..x_r]


def _mv_add(a: dict, b: dict, p: int) -> dict:
    out = dict(a)
    for k, v in b.items():
        s = (out.get(k, 0) + v) % p
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _mv_mul(a: dict, b: dict, p: int) -> dict:
    out: dict = {}
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(x + y for x, y in zip(ka, kb))
            s = (out.get(key, 0) + va * vb) % p
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _mv_pow(a: dict, n: int, r: int, p: int) -> dict:
    out = {(0,) * r: 1}
    base = a
    while n:
        if n & 1:
            out = _mv_mul(out, base, p)
        base = _mv_mul(base, base, p)
        n >>= 1
    return out


def _linear_form(u, r: int, p: int) -> dict:
    out = {}
    for i, c in enumerate(u):
        if c % p:
            key = tuple(1 if j == i else 0 for j in range(r))
            out[key] = c % p
    return out


def power_sum_identity(p: int, r: int, algebra_bound: int = DEFAULT_ALGEBRA_BOUND) -> bool:
    """Whether the sum of u^(q-1) over all u in span(x_1..x_r) equals the
    product of the nonzero u, in F_p[x_1..x_r] with q = p^r."""
    q = p ** r
    if q > algebra_bound:
        raise ValueError("algebra bound exceeded for (p, r) = (%d, %d)" % (p, r))
    points = list(product(range(p), repeat=r))
    lhs: dict = {}
    rhs = {(0,) * r: 1}
    for u in points:
        form = _linear_form(u, r, p)
        if not form:
            continue
        lhs = _mv_add(lhs, _mv_pow(form, q - 1, r, p), p)
        rhs = _mv_mul(rhs, form, p)
    return lhs == rhs


def scalar_power_sum(p: int, n: int) -> int:
    """Sum of c^n over all c in F_p, reduced mod p (0^0 counted as 1)."""
    return sum(pow(c, n, p) for c in range(p)) % p


# ---------------------------------------------------------------------------
# cyclic modules over the group algebra


def cyclic_module_is_free(p: int, r: int, table,
                          algebra_bound: int = DEFAULT_ALGEBRA_BOUND) -> bool:
    """Whether the translates of the element with the given coefficient
    table span the whole group algebra freely (trivial annihilator).

    Also evaluates the sufficient criterion "the sum of all translates is
    nonzero" and raises if the two ever disagree in the forbidden
    direction (criterion positive but annihilator nontrivial)."""
    group = PGroup(p, r)
    if group.q > algebra_bound:
        raise ValueError("algebra bound exceeded for (p, r) = (%d, %d)" % (p, r))
    f = tuple(v % p for v in table)
    if len(f) != group.q:
        raise ValueError("coefficient table must have length %d" % group.q)
    total = group.zero_table
    for u in group.points:
        total = group.table_add(total, group.shift(f, u))
    criterion = any(total)
    # columns of the multiplication-by-f matrix are the translates of f
    translate_cols = [group.shift(f, w) for w in group.points]
    rows = [[translate_cols[col][coord] for col in range(group.q)]
            for coord in range(group.q)]
    annihilator = _kernel(rows, group.q, p)
    free = not annihilator
    if criterion and not free:
        raise RuntimeError(
            "translate-sum criterion held but the annihilator is nontrivial")
    return free
