"""SL2(F_q) orbits of the no-rational-point forms, and the censuses.

Census correctness rests on the coordinate-change invariance of smoothness:
C_{f,g} and C_{Af,Bg} are isomorphic curves for A, B in SL2(F_q), so one
smoothness check per orbit-representative pair determines the verdict for
every pair in the product of the two orbits. The checker is additionally
invariant under swapping the two P1 factors (C_{f,g} vs C_{g,f}), so only
pairs with i <= j are computed and the matrix is mirrored; the q=3 census
is re-verified pair by pair without any reduction in the test suite.
"""

import csv
import json
from multiprocessing import Pool

from .binform import (
    BinForm,
    SL2Mat,
    action_matrix,
    apply_action,
    enumerate_gq,
    random_gq,
)
from .curve import singular_witness
from .errors import NotClosed, TooLarge
from .field import canonical_field
from .rng import RngState, derive_seed

SL2_GUARD = 25
CENSUS_GUARD = (2, 3, 4, 5)
CENSUS_SCHEMA_VERSION = 1


def enumerate_sl2(q: int, allow_large: bool = False):
    """All q(q^2 - 1) matrices of determinant 1, in a fixed order."""
    if q > SL2_GUARD and not allow_large:
        raise TooLarge(f"SL2(F_{q}) has {q * (q * q - 1)} elements; "
                       "pass allow_large=True to proceed")
    field = canonical_field(q)
    els = list(field.enumerate_raw())
    out = []
    for a in els:
        if field.is_zero(a):
            for b in els:
                if field.is_zero(b):
                    continue
                c = field.neg(field.inv(b))
                for d in els:
                    out.append(SL2Mat(field, a, b, c, d))
        else:
            inv_a = field.inv(a)
            for b in els:
                for c in els:
                    d = field.mul(inv_a, field.add(field.one, field.mul(b, c)))
                    out.append(SL2Mat(field, a, b, c, d))
    return out


def sl2_generators(q: int):
    """Elementary matrices [[1,t],[0,1]] and [[1,0],[t,1]] for t != 0; they
    generate SL2 over a field."""
    field = canonical_field(q)
    gens = []
    for t in field.enumerate_raw():
        if field.is_zero(t):
            continue
        gens.append(SL2Mat(field, field.one, t, field.zero, field.one))
        gens.append(SL2Mat(field, field.one, field.zero, t, field.one))
    return gens


class Orbit:
    __slots__ = ("representative", "size", "members")

    def __init__(self, representative: BinForm, members):
        object.__setattr__(self, "representative", representative)
        object.__setattr__(self, "members", tuple(members))
        object.__setattr__(self, "size", len(members))

    def __setattr__(self, *a):
        raise AttributeError("Orbit is immutable")

    def __repr__(self):
        return f"Orbit(size {self.size}, rep {list(self.representative.coeffs)})"


class OrbitTable:
    """Orbit decomposition of a closed set of forms, sorted by
    (size, representative)."""

    __slots__ = ("q", "orbits", "total", "index")

    def __init__(self, q, orbits):
        index = {}
        for i, orb in enumerate(orbits):
            for m in orb.members:
                index[m] = i
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "orbits", tuple(orbits))
        object.__setattr__(self, "total", sum(o.size for o in orbits))
        object.__setattr__(self, "index", index)

    def __setattr__(self, *a):
        raise AttributeError("OrbitTable is immutable")

    def orbit_of(self, form: BinForm) -> int:
        return self.index[form.coeffs]

    def sizes(self):
        return [o.size for o in self.orbits]


def orbit_decomposition(forms, q: int) -> OrbitTable:
    """BFS orbit decomposition under the SL2 substitution action.

    ``forms`` must be closed under the action (NotClosed otherwise); the
    representative of each orbit is its lexicographically smallest member.
    """
    field = canonical_field(q)
    forms = list(forms)
    degree = forms[0].degree if forms else q + 1
    universe = {f.coeffs for f in forms}
    gen_cols = [action_matrix(A, degree) for A in sl2_generators(q)]
    seen = set()
    orbits = []
    for f in forms:
        if f.coeffs in seen:
            continue
        frontier = [f.coeffs]
        members = {f.coeffs}
        while frontier:
            nxt = []
            for cur in frontier:
                for cols in gen_cols:
                    image = apply_action(field, cols, cur)
                    if image not in universe:
                        raise NotClosed(
                            "the action leaves the supplied set of forms"
                        )
                    if image not in members:
                        members.add(image)
                        nxt.append(image)
            frontier = nxt
        seen |= members
        members = sorted(members, key=lambda c: tuple(field.sort_key(x) for x in c))
        rep = BinForm(field, degree, members[0])
        orbits.append(Orbit(rep, members))
    orbits.sort(key=lambda o: (o.size, o.representative.sort_key()))
    return OrbitTable(q, orbits)


def orbit_by_full_group(form: BinForm, q: int):
    """The orbit computed by applying every SL2 matrix (cross-check mode)."""
    from .binform import sl2_act

    return {sl2_act(A, form).coeffs for A in enumerate_sl2(q)}


def representative_factorization(form: BinForm):
    """Annotation for an orbit representative: the leading unit of its
    dehomogenization and the sorted (degree, multiplicity) shape of its
    irreducible factors, e.g. a squared quadratic gives ((2, 2),)."""
    from .unipoly import factor

    poly = form.dehomogenize(0)
    unit, factors = factor(poly, RngState(0))
    shape = tuple(sorted((h.degree, m) for h, m in factors))
    return {"unit_is_one": unit.raw == form.field.one, "shape": shape}


# ---------------------------------------------------------------------------
# Censuses


def _pair_verdict(task):
    q, fc, gc = task
    field = canonical_field(q)
    f = BinForm(field, q + 1, fc)
    g = BinForm(field, q + 1, gc)
    return singular_witness(f, g, RngState(derive_seed(0, hash((fc, gc)) & 0xFFFF))) is None


def _run_tasks(tasks, jobs):
    if jobs <= 1:
        return [_pair_verdict(t) for t in tasks]
    with Pool(jobs) as pool:
        return pool.map(_pair_verdict, tasks, chunksize=64)


class CensusResult:
    """Orbit table, the smooth matrix over representative pairs (f row,
    g column), per-g-orbit sets of smooth f-orbits, and the expanded total."""

    __slots__ = ("q", "orbit_table", "smooth_matrix", "total_smooth_pairs", "f_sets")

    def __init__(self, q, orbit_table, smooth_matrix):
        n = len(orbit_table.orbits)
        sizes = orbit_table.sizes()
        total = 0
        for i in range(n):
            for j in range(n):
                if smooth_matrix[i][j]:
                    total += sizes[i] * sizes[j]
        f_sets = [
            tuple(i for i in range(n) if smooth_matrix[i][j]) for j in range(n)
        ]
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "orbit_table", orbit_table)
        object.__setattr__(self, "smooth_matrix", tuple(tuple(r) for r in smooth_matrix))
        object.__setattr__(self, "total_smooth_pairs", total)
        object.__setattr__(self, "f_sets", tuple(f_sets))

    def __setattr__(self, *a):
        raise AttributeError("CensusResult is immutable")

    def to_json_dict(self):
        from . import __version__

        table = self.orbit_table
        return {
            "schema_version": CENSUS_SCHEMA_VERSION,
            "library_version": __version__,
            "q": self.q,
            "gq_size": table.total,
            "orbit_count": len(table.orbits),
            "orbits": [
                {"size": o.size, "representative": o.representative.to_string()}
                for o in table.orbits
            ],
            "smooth_matrix": [
                [1 if v else 0 for v in row] for row in self.smooth_matrix
            ],
            "f_orbit_sets": [list(s) for s in self.f_sets],
            "total_smooth_pairs": self.total_smooth_pairs,
        }

    def write_json(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(self.to_json_dict(), fh, sort_keys=True, indent=1)
            fh.write("\n")

    def write_csv(self, path):
        """Matrix export: row = f orbit, column = g orbit, cells 0/1."""
        n = len(self.orbit_table.orbits)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["f_orbit\\g_orbit"] + [f"g{j}" for j in range(n)])
            for i in range(n):
                w.writerow([f"f{i}"] + [1 if v else 0 for v in self.smooth_matrix[i]])


def census(q: int, jobs: int = 1, allow_large: bool = False,
           use_swap_symmetry: bool = True) -> CensusResult:
    """Exhaustive orbit-reduced census of smooth pairs over F_q."""
    if q not in CENSUS_GUARD and not allow_large:
        raise TooLarge(f"census is guarded to q in {CENSUS_GUARD}; "
                       "pass allow_large=True to proceed")
    forms = enumerate_gq(q, allow_large=allow_large)
    table = orbit_decomposition(forms, q)
    reps = [o.representative.coeffs for o in table.orbits]
    n = len(reps)
    if use_swap_symmetry:
        tasks = [(q, reps[i], reps[j]) for i in range(n) for j in range(i, n)]
    else:
        tasks = [(q, reps[i], reps[j]) for i in range(n) for j in range(n)]
    verdicts = _run_tasks(tasks, jobs)
    matrix = [[False] * n for _ in range(n)]
    k = 0
    if use_swap_symmetry:
        for i in range(n):
            for j in range(i, n):
                matrix[i][j] = matrix[j][i] = verdicts[k]
                k += 1
    else:
        for i in range(n):
            for j in range(n):
                matrix[i][j] = verdicts[k]
                k += 1
    return CensusResult(q, table, matrix)


def census_unreduced(q: int, jobs: int = 1, allow_large: bool = False):
    """Brute-force verdicts for every pair in G_q x G_q, no orbit or swap
    reduction. Returns ({(f_coeffs, g_coeffs): smooth}, total)."""
    if q not in CENSUS_GUARD and not allow_large:
        raise TooLarge(f"census is guarded to q in {CENSUS_GUARD}")
    forms = enumerate_gq(q, allow_large=allow_large)
    coeffs = [f.coeffs for f in forms]
    tasks = [(q, fc, gc) for fc in coeffs for gc in coeffs]
    verdicts = _run_tasks(tasks, jobs)
    out = {}
    k = 0
    for fc in coeffs:
        for gc in coeffs:
            out[(fc, gc)] = verdicts[k]
            k += 1
    return out, sum(1 for v in out.values() if v)


# ---------------------------------------------------------------------------
# Random sampling


def _sample_verdict(task):
    q, seed, index = task
    rng = RngState(derive_seed(seed, index))
    f = random_gq(q, rng)
    g = random_gq(q, rng)
    return singular_witness(f, g, rng) is None


def sample_stats(q: int, n: int, seed: int, jobs: int = 1):
    """Draw n independent uniform pairs from G_q x G_q (with replacement)
    and count the smooth ones. Deterministic in (q, n, seed), independent
    of the worker count."""
    tasks = [(q, seed, i) for i in range(n)]
    if jobs <= 1:
        verdicts = [_sample_verdict(t) for t in tasks]
    else:
        with Pool(jobs) as pool:
            verdicts = pool.map(_sample_verdict, tasks, chunksize=32)
    return sum(1 for v in verdicts if v), n
