"""Seeded property suites over randomly generated forms.

Each suite replays a fixed number of trials from a deterministic RNG and
reports per-property pass/fail with the worst slack or residual observed.
The same generators back the pytest property tests, so the command-line
``check`` subcommand and the test suite exercise identical corpora.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import elimination
from .chartforms import PolyForm, exterior_derivative, poincare_potential
from .entropy import (
    check_entropy_chain,
    check_entropy_doubling,
    entropy,
    max_entropy_gap,
    normalize_for_chain,
)
from .exterior import ConstForm
from .linear import (
    VectorValuedForm,
    apply_linear_map,
    contraction_matrix,
    is_nondegenerate,
)
from .multiindex import all_indices, count
from .operad import act, block_promote, compose_at, embed_promote
from .polynomial import Polynomial


# ---------------------------------------------------------------------------
# deterministic generators


def random_const_form(rng: random.Random, n: int, degree: int, bound: int = 4) -> ConstForm:
    return ConstForm(n, degree,
                     [rng.randint(-bound, bound) for _ in range(count(n, degree))])


def random_member(rng: random.Random, n: int, k: int, m: int, bound: int = 4) -> VectorValuedForm:
    """A random nondegenerate R^m-valued (k+1)-form.

    Rejection is rare on shapes where nondegeneracy is generic; some shapes
    (a single 2-form on odd-dimensional space, a single 3-form on R^4) have
    no nondegenerate members at all, hence the retry cap.
    """
    for _ in range(500):
        w = VectorValuedForm(
            [random_const_form(rng, n, k + 1, bound) for _ in range(m)]
        )
        if is_nondegenerate(w):
            return w
    raise ValueError(f"no nondegenerate form found for n={n}, k={k}, m={m}")


# shapes on which random coefficients are generically nondegenerate
GENERIC_SHAPES = tuple(
    [(n, 1, 1) for n in (2, 4)]
    + [(n, n - 1, m) for n in (3, 4) for m in (1, 2, 3)]
    + [(n, k, m) for n in (3, 4) for k in range(1, n) for m in (2, 3)]
)


def random_vectors(rng: random.Random, n: int, count_: int, bound: int = 3):
    return [tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(count_)]


def random_member_with_nonzero_values(rng, n, k, m, bound=4):
    """(form, vectors) with every component value nonzero at the vectors."""
    while True:
        w = random_member(rng, n, k, m, bound)
        for _ in range(8):
            vecs = random_vectors(rng, n, k + 1)
            if all(w.evaluate(vecs)):
                return w, vecs


def random_permutation(rng: random.Random, m: int) -> tuple[int, ...]:
    perm = list(range(1, m + 1))
    rng.shuffle(perm)
    return tuple(perm)


def random_invertible_matrix(rng: random.Random, n: int, bound: int = 3):
    while True:
        mat = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if elimination.det(mat):
            return mat


def random_polynomial(rng: random.Random, nvars: int, max_degree: int = 3,
                      terms: int = 3, bound: int = 3) -> Polynomial:
    out = {}
    for _ in range(terms):
        exps = [0] * nvars
        for _ in range(rng.randint(0, max_degree)):
            exps[rng.randrange(nvars)] += 1
        c = rng.randint(-bound, bound)
        if c:
            out[tuple(exps)] = out.get(tuple(exps), 0) + c
    return Polynomial(nvars, out)


def random_polyform(rng: random.Random, nvars: int, degree: int,
                    terms: int = 3) -> PolyForm:
    idx_pool = all_indices(nvars, degree)
    out = {}
    for _ in range(terms):
        idx = idx_pool[rng.randrange(len(idx_pool))]
        poly = random_polynomial(rng, nvars)
        if not poly.is_zero():
            out[idx] = out.get(idx, Polynomial.zero(nvars)) + poly
    return PolyForm(nvars, degree, {i: p for i, p in out.items() if not p.is_zero()})


def random_closed_polyform(rng: random.Random, nvars: int) -> PolyForm:
    """A nonzero exact (hence closed) form obtained as d(random form)."""
    while True:
        degree = rng.randint(0, nvars - 1)
        w = exterior_derivative(random_polyform(rng, nvars, degree))
        if not w.is_zero():
            return w


# ---------------------------------------------------------------------------
# suite plumbing


@dataclass
class PropertyResult:
    name: str
    passed: bool
    trials: int
    metric_name: str = ""
    metric: float | None = None
    failures: int = 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = ""
        if self.metric is not None:
            extra = f", {self.metric_name}={self.metric:.3e}"
        if self.failures:
            extra += f", failures={self.failures}"
        return f"[{status}] {self.name} (trials={self.trials}{extra})"


@dataclass
class SuiteResult:
    suite: str
    seed: int
    properties: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.properties)

    def lines(self) -> list[str]:
        out = [p.line() for p in self.properties]
        status = "PASS" if self.passed else "FAIL"
        out.append(f"suite {self.suite} (seed={self.seed}): {status}")
        return out

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "passed": self.passed,
            "properties": [
                {
                    "name": p.name,
                    "passed": p.passed,
                    "trials": p.trials,
                    "metric_name": p.metric_name,
                    "metric": p.metric,
                    "failures": p.failures,
                }
                for p in self.properties
            ],
        }


# ---------------------------------------------------------------------------
# suites


def nondeg_suite(seed: int, trials: int = 50) -> SuiteResult:
    rng = random.Random(seed)
    result = SuiteResult("nondeg", seed)

    kernel_failures = 0
    for _ in range(trials):
        n = rng.randint(2, 4)
        k = rng.randint(1, n - 1)
        m = rng.randint(1, 3)
        w = VectorValuedForm(
            [random_const_form(rng, n, k + 1, 2) for _ in range(m)]
        )
        kernel = elimination.nullspace(contraction_matrix(w), n)
        if is_nondegenerate(w) != (not kernel):
            kernel_failures += 1
            continue
        # each kernel vector really does contract everything to zero
        for v in kernel:
            if any(not c.contract(v).is_zero() for c in w.components):
                kernel_failures += 1
                break
    result.properties.append(PropertyResult(
        "rank decision matches exact kernel", kernel_failures == 0, trials,
        failures=kernel_failures))

    basis_failures = 0
    for _ in range(trials):
        n, k, m = GENERIC_SHAPES[rng.randrange(len(GENERIC_SHAPES))]
        w = random_member(rng, n, k, m)
        t = random_invertible_matrix(rng, n)
        if not is_nondegenerate(apply_linear_map(w, t)):
            basis_failures += 1
    result.properties.append(PropertyResult(
        "nondegeneracy invariant under basis change", basis_failures == 0,
        trials, failures=basis_failures))

    append_failures = 0
    for _ in range(trials):
        n, k, m = GENERIC_SHAPES[rng.randrange(len(GENERIC_SHAPES))]
        w = random_member(rng, n, k, m)
        extra = random_const_form(rng, n, k + 1)
        grown = VectorValuedForm(w.components + (extra,))
        if not is_nondegenerate(grown):
            append_failures += 1
    result.properties.append(PropertyResult(
        "appending components preserves nondegeneracy", append_failures == 0,
        trials, failures=append_failures))
    return result


def operad_suite(seed: int, trials: int = 100) -> SuiteResult:
    rng = random.Random(seed)
    result = SuiteResult("operad", seed)
    n, k = 3, 1

    seq_failures = 0
    for _ in range(trials):
        l = rng.randint(2, 5)
        m = rng.randint(2, 5)
        q = rng.randint(2, 5)
        f = random_member(rng, n, k, l)
        g = random_member(rng, n, k, m)
        h = random_member(rng, n, k, q)
        if l >= 2:
            kk = rng.randint(2, l)
            i = rng.randint(1, kk - 1)
            lhs = compose_at(compose_at(f, kk, h), i, g)
            rhs = compose_at(compose_at(f, i, g), kk - 1 + m, h)
            if lhs != rhs:
                seq_failures += 1
    result.properties.append(PropertyResult(
        "parallel splice identity", seq_failures == 0, trials,
        failures=seq_failures))

    nest_failures = 0
    for _ in range(trials):
        l = rng.randint(2, 5)
        m = rng.randint(2, 5)
        q = rng.randint(2, 5)
        f = random_member(rng, n, k, l)
        g = random_member(rng, n, k, m)
        h = random_member(rng, n, k, q)
        i = rng.randint(1, l)
        j = rng.randint(1, m)
        lhs = compose_at(f, i, compose_at(g, j, h))
        rhs = compose_at(compose_at(f, i, g), i - 1 + j, h)
        if lhs != rhs:
            nest_failures += 1
    result.properties.append(PropertyResult(
        "nested splice identity", nest_failures == 0, trials,
        failures=nest_failures))

    inner_failures = 0
    for _ in range(trials):
        p = rng.randint(2, 4)
        q = rng.randint(2, 4)
        beta = random_member(rng, n, k, p)
        alpha = random_member(rng, n, k, q)
        i = rng.randint(1, p)
        sigma = random_permutation(rng, q)
        lhs = compose_at(beta, i, act(sigma, alpha))
        rhs = act(embed_promote(sigma, i, p + q - 1), compose_at(beta, i, alpha))
        if lhs != rhs:
            inner_failures += 1
    result.properties.append(PropertyResult(
        "equivariance in the inner slot", inner_failures == 0, trials,
        failures=inner_failures))

    outer_failures = 0
    for _ in range(trials):
        p = rng.randint(2, 4)
        q = rng.randint(2, 4)
        beta = random_member(rng, n, k, p)
        alpha = random_member(rng, n, k, q)
        i = rng.randint(1, p)
        sigma = random_permutation(rng, p)
        sizes = [1] * p
        sizes[i - 1] = q
        lhs = compose_at(act(sigma, beta), i, alpha)
        rhs = act(block_promote(sigma, sizes), compose_at(beta, sigma[i - 1], alpha))
        if lhs != rhs:
            outer_failures += 1
    result.properties.append(PropertyResult(
        "equivariance in the outer slots", outer_failures == 0, trials,
        failures=outer_failures))

    membership_failures = 0
    for _ in range(trials // 2):
        p = rng.randint(2, 4)
        q = rng.randint(2, 4)
        beta = random_member(rng, n, k, p)
        alpha = random_member(rng, n, k, q)
        composed = compose_at(beta, rng.randint(1, p), alpha)
        if not is_nondegenerate(composed):
            membership_failures += 1
    result.properties.append(PropertyResult(
        "composition stays nondegenerate", membership_failures == 0,
        trials // 2, failures=membership_failures))
    return result


def entropy_suite(seed: int, doubling_trials: int = 1000,
                  chain_trials: int = 100) -> SuiteResult:
    rng = random.Random(seed)
    result = SuiteResult("entropy", seed)
    n, k = 3, 1

    min_slack = math.inf
    doubling_failures = 0
    for _ in range(doubling_trials):
        q = rng.randint(2, 5)
        alpha, vecs = random_member_with_nonzero_values(rng, n, k, q)
        i = rng.randint(1, q)
        check = check_entropy_doubling(alpha, i, vecs)
        min_slack = min(min_slack, check.slack)
        if not check.holds:
            doubling_failures += 1
    result.properties.append(PropertyResult(
        "self-composition bound", doubling_failures == 0, doubling_trials,
        "min_slack", min_slack, doubling_failures))

    max_residual = 0.0
    chain_failures = 0
    for _ in range(chain_trials):
        p = rng.randint(2, 4)
        q = rng.randint(2, 4)
        beta, vecs = random_member_with_nonzero_values(rng, n, k, p)
        while True:
            alpha = random_member(rng, n, k, q)
            if all(alpha.evaluate(vecs)):
                break
        i = rng.randint(1, p)
        scaled = normalize_for_chain(alpha, beta, i, vecs)
        check = check_entropy_chain(beta, i, scaled, vecs)
        max_residual = max(max_residual, check.residual)
        if not check.holds:
            chain_failures += 1
    result.properties.append(PropertyResult(
        "chain rule after normalization", chain_failures == 0, chain_trials,
        "max_residual", max_residual, chain_failures))

    max_gap = max(max_entropy_gap(q) for q in range(2, 11))
    result.properties.append(PropertyResult(
        "constant stacks reach maximal entropy", max_gap <= 1e-12, 9,
        "max_gap", max_gap))

    bound_failures = 0
    scale_failures = 0
    trials = 200
    for _ in range(trials):
        q = rng.randint(2, 5)
        alpha, vecs = random_member_with_nonzero_values(rng, n, k, q)
        report = entropy(alpha, vecs)
        if not (-1e-12 <= report.entropy <= math.log(q) + 1e-12):
            bound_failures += 1
        lam = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        scaled = VectorValuedForm([c * lam for c in alpha.components])
        scaled_report = entropy(scaled, vecs)
        if scaled_report.weights != report.weights or \
                abs(scaled_report.entropy - report.entropy) > 1e-12:
            scale_failures += 1
    result.properties.append(PropertyResult(
        "entropy range [0, ln arity]", bound_failures == 0, trials,
        failures=bound_failures))
    result.properties.append(PropertyResult(
        "entropy is scale invariant", scale_failures == 0, trials,
        failures=scale_failures))
    return result


def poincare_suite(seed: int, trials: int = 50) -> SuiteResult:
    rng = random.Random(seed)
    result = SuiteResult("poincare", seed)

    failures = 0
    for _ in range(trials):
        nvars = rng.randint(2, 6)
        w = random_closed_polyform(rng, nvars)
        center = None
        if rng.random() < 0.5:
            center = [Fraction(rng.randint(-2, 2)) for _ in range(nvars)]
        potential = poincare_potential(w, center)
        if exterior_derivative(potential) != w:
            failures += 1
    result.properties.append(PropertyResult(
        "d(potential) reproduces the closed form", failures == 0, trials,
        failures=failures))
    return result


SUITES = {
    "nondeg": nondeg_suite,
    "operad": operad_suite,
    "entropy": entropy_suite,
    "poincare": poincare_suite,
}


def run_suite(name: str, seed: int) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return suite(seed)
