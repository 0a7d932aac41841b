"""Verification suites: every identity checked against an independent route.

Each suite returns a :class:`VerifyReport`. Checks are grouped coarsely (one
check per parameter point, aggregated over the permutations at that point)
so that reports stay small enough to read.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import oracle, partitions, sequences, series, splitting
from .condition import SplitCondition
from .oracle import ClassSpec, Family

SUITES = ("main", "lemma", "partition", "egf", "recurrence", "sign")


@dataclass
class Check:
    suite: str
    name: str
    params: dict
    expected: object
    actual: object
    passed: bool

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "name": self.name,
            "params": {k: str(v) for k, v in self.params.items()},
            "expected": str(self.expected),
            "actual": str(self.actual),
            "passed": self.passed,
        }

    def describe(self) -> str:
        ps = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"[{self.suite}] {self.name}({ps}): expected {self.expected}, got {self.actual}"


@dataclass
class VerifyReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    def add(self, name: str, params: dict, expected, actual, passed: bool | None = None) -> bool:
        ok = expected == actual if passed is None else passed
        self.checks.append(Check(self.suite, name, dict(params), expected, actual, ok))
        return ok

    def extend(self, other: VerifyReport) -> None:
        self.checks.extend(other.checks)
        self.notes.extend(other.notes)
        self.wall_time += other.wall_time

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def counts_by_suite(self) -> dict[str, tuple[int, int]]:
        out: dict[str, list[int]] = {}
        for c in self.checks:
            slot = out.setdefault(c.suite, [0, 0])
            slot[0 if c.passed else 1] += 1
        return {k: tuple(v) for k, v in out.items()}

    def to_json(self) -> str:
        fails = self.failures
        doc = {
            "suite": self.suite,
            "summary": {
                "checks": str(len(self.checks)),
                "passed": str(len(self.checks) - len(fails)),
                "failed": str(len(fails)),
                "wall_time_s": f"{self.wall_time:.3f}",
                "by_suite": {s: {"passed": str(p), "failed": str(f)}
                             for s, (p, f) in sorted(self.counts_by_suite().items())},
            },
            "counterexamples": [c.as_dict() for c in fails[:10]],
            "notes": self.notes,
            "checks": [c.as_dict() for c in self.checks],
        }
        return json.dumps(doc, indent=1) + "\n"

    def to_text(self) -> str:
        lines = []
        for s, (p, f) in sorted(self.counts_by_suite().items()):
            lines.append(f"{s:<11} {'PASS' if f == 0 else 'FAIL'}  {p} passed, {f} failed")
        fails = self.failures
        if fails:
            lines.append(f"first {min(10, len(fails))} counterexamples:")
            lines.extend("  " + c.describe() for c in fails[:10])
        if self.notes:
            lines.append("notes:")
            lines.extend("  " + n for n in self.notes)
        lines.append(f"total: {len(self.checks)} checks, {len(fails)} failed, "
                     f"{self.wall_time:.2f}s")
        return "\n".join(lines) + "\n"


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_time = time.perf_counter() - t0
        return report
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def class_specs(r: int, u: int, m: int, n: int):
    """Every ClassSpec at one (r, u, m, n) point: all families, k and i."""
    yield ClassSpec(Family.BLOCK, r, u, m, n)
    yield ClassSpec(Family.SEP, r, u, m, n)
    for i in (0, 1):
        yield ClassSpec(Family.BLOCK_PAR, r, u, m, n, i=i)
        yield ClassSpec(Family.SEP_PAR, r, u, m, n, i=i)
    for k in range(r + 1):
        yield ClassSpec(Family.BLOCK_K, r, u, m, n, k=k)
        for i in (0, 1):
            yield ClassSpec(Family.BLOCK_K_PAR, r, u, m, n, k=k, i=i)


def _spec_params(spec: ClassSpec) -> dict:
    d = {"family": spec.family.value, "r": spec.r, "u": spec.u, "m": spec.m, "n": spec.n}
    if spec.k is not None:
        d["k"] = spec.k
    if spec.i is not None:
        d["i"] = spec.i
    return d


@_timed
def suite_main(max_size: int = 8, r_max: int = 10, n_max: int = 50, front_max: int = 4) -> VerifyReport:
    """Formula counts for all six families against exhaustive enumeration,
    plus the block-derangement identity."""
    rep = VerifyReport("main")
    for r in range(min(front_max, max_size) + 1):
        for n in range(max_size - r + 1):
            grand = 0
            for u in range(r + 1):
                for m in range(n + 1):
                    for spec in class_specs(r, u, m, n):
                        rep.add("formula-vs-oracle", _spec_params(spec),
                                oracle.brute_count(spec, max_size), sequences.count(spec))
                    block = oracle.brute_count(ClassSpec(Family.BLOCK, r, u, m, n), max_size)
                    grand += block
                    base = dict(r=r, u=u, m=m, n=n)
                    rep.add("sum-over-k", base, block, sum(
                        oracle.brute_count(ClassSpec(Family.BLOCK_K, r, u, m, n, k=k), max_size)
                        for k in range(r + 1)))
                    rep.add("sum-over-parity", base, block, sum(
                        oracle.brute_count(ClassSpec(Family.BLOCK_PAR, r, u, m, n, i=i), max_size)
                        for i in (0, 1)))
                    sep = oracle.brute_count(ClassSpec(Family.SEP, r, u, m, n), max_size)
                    rep.add("sep-sum-over-parity", base, sep, sum(
                        oracle.brute_count(ClassSpec(Family.SEP_PAR, r, u, m, n, i=i), max_size)
                        for i in (0, 1)))
            rep.add("block-partition", dict(r=r, n=n), math.factorial(r + n), grand)
            # oracle side of the block-derangement identity
            rep.add("block-derangement-oracle", dict(r=r, n=n),
                    math.factorial(r) * sequences.d_r(n, r),
                    oracle.brute_count(ClassSpec(Family.BLOCK, r, 0, 0, n), max_size))
    for n in range(min(6, max_size) + 1):
        rep.add("D_0(n)=D(n)", dict(n=n), sequences.derangement(n),
                oracle.brute_count(ClassSpec(Family.SEP, 0, 0, 0, n), max_size))
        if n + 1 <= max_size:
            rep.add("D_1(n)=D(n+1)", dict(n=n), sequences.derangement(n + 1),
                    oracle.brute_count(ClassSpec(Family.SEP, 1, 0, 0, n), max_size))
    for r in range(r_max + 1):
        rows = sequences.parity_table(r, n_max)[r]
        for n in range(n_max + 1):
            rep.add("block-derangement", dict(r=r, n=n),
                    math.factorial(r) * sum(rows[n]), sequences.big_d(r, 0, 0, n))
    return rep


@_timed
def suite_lemma(max_size: int = 7) -> VerifyReport:
    """Fiber sizes of the splitting map against the partition-sum formula."""
    rep = VerifyReport("lemma")
    for r in range(max_size + 1):
        conds = ([SplitCondition.any()] + [SplitCondition.equal_k(k) for k in range(r + 1)]
                 + [SplitCondition.parity(e) for e in (0, 1)])
        formulas = {w: splitting.fiber_size_formula(r, w) for w in conds}
        observed: dict[SplitCondition, set[int]] = {w: set() for w in conds}
        for n in range(max_size - r + 1):
            for u in range(r + 1):
                for m in range(n + 1):
                    members = list(oracle.enumerate_class(ClassSpec(Family.SEP, r, u, m, n), max_size))
                    if not members:
                        continue
                    sizes = {w: set() for w in conds}
                    roundtrip = injective = parity_ok = stats_ok = True
                    for rho in members:
                        for w in conds:
                            fib = splitting.fiber(rho, r, w, max_r=max_size)
                            sizes[w].add(len(fib))
                            if w.variant != "ANY":
                                continue
                            injective &= len(set(fib)) == len(fib)
                            for sigma in fib:
                                roundtrip &= splitting.split(sigma, r) == rho
                                kf = sigma.front_cycle_count(r)
                                parity_ok &= sigma.parity() == (rho.parity() + r + kf) % 2
                                st = oracle.classify(sigma, r)
                                stats_ok &= st.u_pairs == u and st.m_fixed_tail == m
                    base = dict(r=r, u=u, m=m, n=n)
                    for w in conds:
                        observed[w] |= sizes[w]
                        rep.add("fiber-size", {**base, "w": w, "members": len(members)},
                                {formulas[w]}, sizes[w])
                    rep.add("split-glue-roundtrip", base, True, roundtrip)
                    rep.add("distinct-gluings", base, True, injective)
                    rep.add("parity-transport", base, True, parity_ok)
                    rep.add("statistics-preserved", base, True, stats_ok)
        for w in conds:
            if observed[w]:
                rep.add("fiber-size-independent-of-rho", dict(r=r, w=w), 1, len(observed[w]))
    return rep


@_timed
def suite_partition(r_max: int = 20, d_max: int = 6) -> VerifyReport:
    """Filtered partition-weight sums against Stirling-number right sides."""
    rep = VerifyReport("partition")
    literal_gaps = []
    for r in range(r_max + 1):
        fact = math.factorial(r)
        row = sequences.stirling_row(r)
        rep.add("partition-count", dict(r=r), partitions.partition_count(r),
                len(partitions.enumerate_cycle_partitions(r)))
        rep.add("sum", dict(r=r), Fraction(1),
                partitions.filtered_weight_sum(r, SplitCondition.any()))
        for eps in (0, 1):
            rep.add("sum-parity", dict(r=r, eps=eps), sequences.weight_sum_piecewise(r, eps),
                    partitions.filtered_weight_sum(r, SplitCondition.parity(eps)))
            rep.add("f-parity", dict(r=r, eps=eps),
                    fact // 2 if r >= 2 else (1 - r if eps == 0 else r),
                    sequences.f_value(r, SplitCondition.parity(eps)))
        for k in range(r + 1):
            rep.add("sum-k", dict(r=r, k=k), Fraction(row[k], fact),
                    partitions.filtered_weight_sum(r, SplitCondition.equal_k(k)))
            rep.add("f(r,k)", dict(r=r, k=k), row[k],
                    sequences.f_value(r, SplitCondition.equal_k(k)))
        for d in range(1, d_max + 1):
            for c in range(d):
                lhs = partitions.filtered_weight_sum(r, SplitCondition.residue(c, d))
                rhs = Fraction(sum(row[k] for k in range(r + 1) if k % d == c), fact)
                rep.add("sum-residue", dict(r=r, c=c, d=d), rhs, lhs)
                literal = Fraction(sum(row[k] for k in range(1, r + 1) if k % d == c), fact)
                if literal != lhs:
                    literal_gaps.append(f"(r={r}, c={c}, d={d}): lhs {lhs}, k>=1 sum {literal}")
    if literal_gaps:
        rep.notes.append(
            "residue sums: the right side summed over k >= 1 only misses the [0,0] = 1 term; "
            "checked with k from 0. Points where the k >= 1 reading differs: "
            + "; ".join(literal_gaps))
    return rep


@_timed
def suite_egf(r_max: int = 8, n_max: int = 25, poly_r_max: int = 12) -> VerifyReport:
    """Series coefficients against the sequence formulas; ODE; rising
    factorial polynomial against partition sums."""
    rep = VerifyReport("egf")
    order = n_max
    for r in range(r_max + 1):
        g = series.egf_g_r(r, order)
        f = series.egf_f_r(r, order)
        fp = [series.egf_f_r_parity(r, i, order) for i in (0, 1)]
        for n in range(n_max + 1):
            base = dict(r=r, n=n)
            rep.add("G_r", base, sequences.c_r(n, r), g.egf_coefficient(n))
            rep.add("F_r", base, sequences.d_r(n, r), f.egf_coefficient(n))
            for i in (0, 1):
                rep.add("F_r^(i)", {**base, "i": i}, sequences.d_r_parity_explicit(n, r, i),
                        fp[i].egf_coefficient(n))
        rep.add("parity-split-sum", dict(r=r), f.coefficients, (fp[0] + fp[1]).coefficients)
        rep.add("parity-split-difference", dict(r=r), g.coefficients, (fp[1] - fp[0]).coefficients)
        if r >= 1:
            one_plus_x = series.TruncatedSeries.of([1, 1], order)
            x_plus_r = series.TruncatedSeries.of([r, 1], order)
            lhs = one_plus_x * g.derivative()
            rhs = -(series.egf_g_r(r - 1, order).scale(r) + x_plus_r * g)
            rep.add("G_r-ode", dict(r=r), rhs.truncate(order - 1).coefficients,
                    lhs.truncate(order - 1).coefficients)
    for r in (0, 1):
        lit = [sequences.c_r_literal(n, r) for n in range(8)]
        closed = [sequences.c_r(n, r) for n in range(8)]
        egf = series.egf_g_r(r, 7).egf_coefficients()
        rep.notes.append(
            f"C_{r}(n), n=0..7: series {egf}; special-cased closed form {closed}; "
            f"r>=2 sum read literally {lit} "
            f"({'agrees' if lit == egf else 'disagrees'} with the series)")
    for r in range(poly_r_max + 1):
        rising = series.rising_factorial_poly(r)
        falling = series.falling_factorial_poly(r)
        reflected = [(-1) ** (r + k) * falling[k] for k in range(r + 1)]
        rep.add("rising-vs-falling", dict(r=r), list(rising.coefficients), reflected)
        for k in range(r + 1):
            rep.add("rising-coefficient", dict(r=r, k=k),
                    partitions.filtered_weight_sum(r, SplitCondition.equal_k(k)),
                    Fraction(rising[k], math.factorial(r)))
    return rep


@_timed
def suite_recurrence(r_max: int = 10, n_max: int = 50, max_size: int = 8) -> VerifyReport:
    """Recurrences against explicit formulas; base cases against the oracle."""
    rep = VerifyReport("recurrence")
    table = sequences.parity_table(r_max, n_max)
    for r in range(r_max + 1):
        for n in range(n_max + 1):
            base = dict(r=r, n=n)
            explicit = [sequences.d_r_parity_explicit(n, r, i) for i in (0, 1)]
            for i in (0, 1):
                rep.add("recurrence-vs-explicit", {**base, "i": i}, explicit[i], table[r][n][i])
                if r >= 2:
                    rep.add("single-sum-form", {**base, "i": i}, explicit[i],
                            sequences.d_r_parity_double_sum(n, r, i))
            rep.add("additive-split", base, sequences.d_r(n, r), sum(table[r][n]))
            rep.add("C_r-recurrence", base, sequences.c_r(n, r), sequences.c_r_recurrence(n, r))
        for i in (0, 1):
            rep.add("base-D_r^(i)(r)", dict(r=r, i=i),
                    math.factorial(r) * (1 + (-1) ** (r + i)) // 2,
                    sequences.d_r_parity_explicit(r, r, i))
        rep.add("base-C_r(r)", dict(r=r), (-1) ** (r + 1) * math.factorial(r), sequences.c_r(r, r))
        if 2 * r <= max_size:
            counts = [oracle.brute_count(ClassSpec(Family.SEP_PAR, r, 0, 0, r, i=i), max_size)
                      for i in (0, 1)]
            for i in (0, 1):
                rep.add("base-D_r^(i)(r)-oracle", dict(r=r, i=i), sequences.base_value(r, i), counts[i])
            rep.add("base-C_r(r)-oracle", dict(r=r), (-1) ** (r + 1) * math.factorial(r),
                    counts[1] - counts[0])
    for n in range(n_max + 1):
        rep.add("D_0(n)=D(n)", dict(n=n), sequences.derangement(n), sequences.d_r(n, 0))
        rep.add("D_1(n)=D(n+1)", dict(n=n), sequences.derangement(n + 1), sequences.d_r(n, 1))
    for r in range(31):
        rep.add("stirling-row-sum", dict(r=r), math.factorial(r), sum(sequences.stirling_row(r)))
    return rep


@_timed
def suite_sign(r_max: int = 10, n_max: int = 50) -> VerifyReport:
    """(-1)^n (D_r^(0)(n) - D_r^(1)(n)) > 0 for r >= 2, n >= r."""
    rep = VerifyReport("sign")
    for r in range(2, r_max + 1):
        for n in range(r, n_max + 1):
            v = (-1) ** n * (sequences.d_r_parity_explicit(n, r, 0) - sequences.d_r_parity_explicit(n, r, 1))
            rep.add("sign-alternation", dict(r=r, n=n), "> 0", v, passed=v > 0)
    return rep


def run_suite(name: str, max_size: int = 8, r_max: int = 10, n_max: int = 50) -> VerifyReport:
    """Run one suite (or ``all``). ``max_size`` caps oracle enumeration (the
    lemma suite additionally stops at 7); ``r_max``/``n_max`` bound the
    formula-only grids of the main, recurrence and sign suites. The partition
    and egf suites run their fixed grids."""
    runners = {
        "main": lambda: suite_main(max_size=max_size, r_max=r_max, n_max=n_max),
        "lemma": lambda: suite_lemma(max_size=min(max_size, 7)),
        "partition": suite_partition,
        "egf": suite_egf,
        "recurrence": lambda: suite_recurrence(r_max=r_max, n_max=n_max, max_size=max_size),
        "sign": lambda: suite_sign(r_max=r_max, n_max=n_max),
    }
    if name == "all":
        total = VerifyReport("all")
        for s in SUITES:
            total.extend(runners[s]())
        return total
    if name not in runners:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES + ('all',)}")
    return runners[name]()
