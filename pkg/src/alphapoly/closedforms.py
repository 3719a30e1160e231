"""The formula path: one operation per closed-form identity.

Every function here computes the characteristic polynomial of a transformed
graph from data of the *input* graph only (its charpoly, its principal
submatrix charpolys, its adjacency spectrum structure); none of them ever
builds the transformed graph.  `verify_identity` pits each closed form
against the direct path on the constructed graph and reports exact
polynomial equality.

Negative prefactor exponents (trees in the subdivision and Q identities,
star-like inputs of the semi-regular line identity) are resolved by exact
division.  A division that fails to be exact is a falsification signal and
surfaces as a failed verdict, never as a crash.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .engine import (
    PolyMatrix,
    adjacency_matrix,
    alpha_matrix,
    charpoly_direct,
    charpoly_submatrix,
    charpoly_submatrix_multi,
    polymatrix_det,
)
from .graphs import (
    FamilySpec,
    Graph,
    GraphParameterError,
    family_generate,
    is_regular,
    is_semiregular_bipartite,
)
from . import operations as ops
from .polynomials import (
    ALPHA,
    ALPHA_ONE,
    AlphaPoly,
    BiPoly,
    DivisibilityError,
    FactoredSpectrum,
    LAM,
    eval_alpha,
    exact_divide,
    substitute_lambda,
)
from .verdict import FAIL, HYPOTHESIS_NOT_MET, PASS, VerdictReport


class HypothesisNotMet(ValueError):
    """The input graph does not satisfy an identity's hypothesis."""


ONE_MINUS_A = AlphaPoly((1, -1))
# a*l - 2a + 1, the coupling factor of a pendant edge
PENDANT_FACTOR = BiPoly((AlphaPoly((1, -2)), ALPHA))


def _apply_power(core: BiPoly, pref: BiPoly, e: int) -> BiPoly:
    if e >= 0:
        return core * pref ** e
    return exact_divide(core, pref ** (-e))


def _quadratic(lam_coeff: AlphaPoly, const: AlphaPoly) -> BiPoly:
    """l^2 + lam_coeff*l + const."""
    return BiPoly((const, lam_coeff, ALPHA_ONE))


def _require_regular(g: Graph, min_r: int) -> int:
    r = is_regular(g)
    if r is None:
        raise HypothesisNotMet("graph is not regular")
    if r < min_r:
        raise HypothesisNotMet(f"degree {r} below required minimum {min_r}")
    return r


# ---------------------------------------------------------------------------
# family spectra
# ---------------------------------------------------------------------------

def cf_family_spectrum(spec: FamilySpec) -> FactoredSpectrum:
    """Closed-form spectra of complete, complete bipartite and star graphs.

    Conjugate eigenvalue pairs are emitted as a single quadratic so the
    result stays inside Q[a][l].
    """
    if spec.kind == "complete":
        n = spec.params[0]
        if n == 1:
            return FactoredSpectrum([(LAM, 1)])
        return FactoredSpectrum([
            (LAM - (n - 1), 1),
            (LAM - AlphaPoly((-1, n)), n - 1),
        ])
    if spec.kind == "complete_bipartite":
        a, b = spec.params
        p, q = max(a, b), min(a, b)
        factors = []
        if q >= 2:
            factors.append((LAM - p * ALPHA, q - 1))
        if p >= 2:
            factors.append((LAM - q * ALPHA, p - 1))
        factors.append((_quadratic(AlphaPoly((0, -(p + q))),
                                   AlphaPoly((-p * q, 2 * p * q))), 1))
        return FactoredSpectrum(factors)
    if spec.kind == "star":
        n = spec.params[0]
        if n < 2:
            raise GraphParameterError("star spectrum needs at least 2 vertices")
        factors = []
        if n >= 3:
            factors.append((LAM - ALPHA, n - 2))
        factors.append((_quadratic(AlphaPoly((0, -n)),
                                   AlphaPoly((-(n - 1), 2 * (n - 1)))), 1))
        return FactoredSpectrum(factors)
    raise GraphParameterError(f"no closed-form spectrum for family {spec.kind!r}")


def _bipartite_submatrix_factors(p: int, q: int) -> list:
    """Spectrum factors after removing one vertex from the p-sized part of
    K_{p,q}; remaining diagonal keeps the original degrees."""
    if p == 1:
        return [(LAM - ALPHA, q)]
    factors = []
    if q >= 2:
        factors.append((LAM - p * ALPHA, q - 1))
    if p >= 3:
        factors.append((LAM - q * ALPHA, p - 2))
    # constant term q*((a-1)^2(1-p) + a^2 p) of the rank-one coupling block
    am1sq = ONE_MINUS_A * ONE_MINUS_A
    const = q * ((1 - p) * am1sq + p * ALPHA * ALPHA)
    factors.append((_quadratic(AlphaPoly((0, -(p + q))), const), 1))
    return factors


def cf_submatrix_spectrum(spec: FamilySpec, remove_from: str | None = None) -> FactoredSpectrum:
    """Spectrum of the principal submatrix with one row/column removed.

    remove_from selects the deleted vertex: "first"/"second" part for
    complete bipartite graphs, "center"/"leaf" for stars, ignored for
    complete graphs (all removals agree by symmetry).
    """
    if spec.kind == "complete":
        n = spec.params[0]
        if n < 2:
            raise GraphParameterError("submatrix needs at least 2 vertices")
        factors = [(LAM - AlphaPoly((n - 2, 1)), 1)]
        if n >= 3:
            factors.append((LAM - AlphaPoly((-1, n)), n - 2))
        return FactoredSpectrum(factors)
    if spec.kind == "star":
        n = spec.params[0]
        if n < 2:
            raise GraphParameterError("submatrix needs at least 2 vertices")
        side = remove_from or "center"
        if side == "center":
            return FactoredSpectrum([(LAM - ALPHA, n - 1)])
        if side == "leaf":
            return FactoredSpectrum(_bipartite_submatrix_factors(n - 1, 1))
        raise GraphParameterError(f"bad removal side {side!r} for a star")
    if spec.kind == "complete_bipartite":
        a, b = spec.params
        side = remove_from or "first"
        if side == "first":
            p, q = a, b
        elif side == "second":
            p, q = b, a
        else:
            raise GraphParameterError(f"bad removal side {side!r}")
        return FactoredSpectrum(_bipartite_submatrix_factors(p, q))
    raise GraphParameterError(f"no closed-form submatrix spectrum for {spec.kind!r}")


def submatrix_removal_vertex(spec: FamilySpec, remove_from: str | None = None) -> int:
    """Vertex index matching the removal side under the family labelings."""
    if spec.kind == "complete":
        return 0
    if spec.kind == "star":
        return 0 if (remove_from or "center") == "center" else 1
    if spec.kind == "complete_bipartite":
        return 0 if (remove_from or "first") == "first" else spec.params[0]
    raise GraphParameterError(f"no removal convention for {spec.kind!r}")


# ---------------------------------------------------------------------------
# complement, pendants, coalescence
# ---------------------------------------------------------------------------

def cf_complement_regular(g: Graph) -> BiPoly:
    """Complement charpoly of a regular graph via reflection at na-1.

    The rational factor (l+r+1-n)/(l+r+1-na) is handled by exact division;
    failure to divide falsifies the identity.
    """
    r = _require_regular(g, 0)
    n = g.n
    reflected = substitute_lambda(
        charpoly_direct(g), BiPoly((AlphaPoly((-1, n)), -ALPHA_ONE)), 1, n)
    sign = 1 if n % 2 == 0 else -1
    numerator = sign * (LAM + (r + 1 - n)) * reflected
    denominator = LAM + AlphaPoly((r + 1, -n))
    return exact_divide(numerator, denominator)


def cf_pendant_one(h: Graph, v: int, s: int) -> BiPoly:
    """Charpoly after adding s pendant edges at the single vertex v."""
    if h.n < 2:
        raise HypothesisNotMet("base graph needs at least 2 vertices")
    if not (0 <= v < h.n):
        raise GraphParameterError(f"vertex {v} out of range")
    if s < 1:
        raise GraphParameterError("pendant count must be >= 1")
    lm = LAM - ALPHA
    return (lm ** s * charpoly_direct(h)
            - s * PENDANT_FACTOR * lm ** (s - 1) * charpoly_submatrix(h, v))


def cf_pendant_many(g: Graph, targets) -> BiPoly:
    """Charpoly after one pendant edge at each of the distinct targets.

    Eliminating all leaf rows of the bordered matrix at once and expanding
    the resulting rank-one diagonal corrections multilinearly gives one
    principal-submatrix polynomial per subset of targets:

        sum over T of (-(a*l - 2a + 1))^|T| (l - a)^(s-|T|) P_{G minus T}

    Iterating the one-vertex rule reproduces exactly this expansion.
    """
    targets = list(targets)
    if len(set(targets)) != len(targets):
        raise GraphParameterError("pendant targets must be distinct")
    for t in targets:
        if not (0 <= t < g.n):
            raise GraphParameterError(f"pendant target {t} out of range")
    s = len(targets)
    lm = LAM - ALPHA
    total = BiPoly.zero()
    for size in range(s + 1):
        for subset in combinations(targets, size):
            term = ((-PENDANT_FACTOR) ** size * lm ** (s - size)
                    * charpoly_submatrix_multi(g, subset))
            total = total + term
    return total


def cf_coalescence(g: Graph, u: int, h: Graph, v: int) -> BiPoly:
    """Charpoly of the vertex identification of (g, u) with (h, v)."""
    if not (0 <= u < g.n):
        raise GraphParameterError(f"vertex {u} not in first graph")
    if not (0 <= v < h.n):
        raise GraphParameterError(f"vertex {v} not in second graph")
    pg, pgu = charpoly_direct(g), charpoly_submatrix(g, u)
    ph, phv = charpoly_direct(h), charpoly_submatrix(h, v)
    return pg * phv + pgu * ph - LAM * pgu * phv


# ---------------------------------------------------------------------------
# line graphs
# ---------------------------------------------------------------------------

def _line_regular_core(g: Graph, variant: str, r: int) -> BiPoly:
    n, m = g.n, g.m
    pref = LAM - AlphaPoly((-2, 2 * r))
    if variant == "aalpha":
        core = substitute_lambda(charpoly_direct(g), LAM - (r - 2), 1, n)
    elif variant == "a":
        p0 = eval_alpha(charpoly_direct(g), 0)
        num = LAM - AlphaPoly((r - 2, r))
        core = substitute_lambda(p0, num, ONE_MINUS_A, n)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _apply_power(core, pref, m - n)


def cf_line_regular(g: Graph, variant: str = "aalpha") -> BiPoly:
    """Line-graph charpoly of a regular graph (degree at least 2)."""
    r = _require_regular(g, 2)
    return _line_regular_core(g, variant, r)


def _even_part(g: Graph, n1: int, n2: int) -> BiPoly:
    """Monic Q with adjacency charpoly P0(x) = x^(n1-n2) * Q(x^2).

    Exists exactly for the bipartite semi-regular inputs of the line-graph
    identity; any violation is reported as a falsification.
    """
    coeffs = eval_alpha(charpoly_direct(g), 0).constant_coeffs()
    shift = n1 - n2
    q = [Fraction(0)] * (n2 + 1)
    for j, c in enumerate(coeffs):
        if not c:
            continue
        if j < shift or (j - shift) % 2:
            raise DivisibilityError(
                "adjacency charpoly lacks the bipartite even/odd split",
                remainder=BiPoly((AlphaPoly((c,)),)))
        q[(j - shift) // 2] = c
    return BiPoly(AlphaPoly((c,)) for c in q)


def cf_line_semiregular(g: Graph, variant: str = "split") -> BiPoly:
    """Line-graph charpoly of a semi-regular bipartite graph.

    Works entirely in Q[a][l]: the square roots of the source identity never
    appear because the even part Q of the adjacency charpoly is substituted
    at the product of the two shifted variables, with all (1-a) denominator
    powers cancelling exactly.  The default "split" variant divides the
    known r1*r2 root out of Q first (that exact division doubles as a check
    that +-sqrt(r1*r2) are adjacency eigenvalues); "product" substitutes
    into the whole of Q.
    """
    params = is_semiregular_bipartite(g)
    if params is None:
        raise HypothesisNotMet("graph is not connected semi-regular bipartite")
    n1, n2, r1, r2 = params
    n, m = g.n, g.m
    beta = m - n
    q = _even_part(g, n1, n2)
    a1 = LAM - r2 * ALPHA - (r1 - 2)
    a2 = LAM - r1 * ALPHA - (r2 - 2)
    den2 = ONE_MINUS_A * ONE_MINUS_A
    pref = LAM - (r1 + r2) * ALPHA + 2
    if variant == "product":
        core = substitute_lambda(q, a1 * a2, den2, n2) * a1 ** (n1 - n2)
        return _apply_power(core, pref, beta)
    if variant == "split":
        q2 = exact_divide(q, LAM - r1 * r2)
        core = (substitute_lambda(q2, a1 * a2, den2, n2 - 1)
                * a1 ** (n1 - n2) * (LAM - (r1 + r2 - 2)))
        return _apply_power(core, pref, beta + 1)
    raise ValueError(f"unknown variant {variant!r}")


def classical_line_semiregular(g: Graph) -> BiPoly:
    """Adjacency-only (weight 0) version of the semi-regular line identity."""
    params = is_semiregular_bipartite(g)
    if params is None:
        raise HypothesisNotMet("graph is not connected semi-regular bipartite")
    n1, n2, r1, r2 = params
    beta = g.m - g.n
    q = _even_part(g, n1, n2)
    a1 = LAM - (r1 - 2)
    a2 = LAM - (r2 - 2)
    core = substitute_lambda(q, a1 * a2, 1, n2) * a1 ** (n1 - n2)
    return _apply_power(core, LAM + 2, beta)


# ---------------------------------------------------------------------------
# subdivision and the edge-vertex operations
# ---------------------------------------------------------------------------

def cf_subdivision(g: Graph, variant: str = "aalpha") -> BiPoly:
    """Subdivision charpoly of a regular graph."""
    r = _require_regular(g, 1)
    n, m = g.n, g.m
    pref = LAM - 2 * ALPHA
    if variant == "aalpha":
        num = _quadratic(-(r + 2) * ALPHA, AlphaPoly((-r, 3 * r)))
        core = substitute_lambda(charpoly_direct(g), num, ONE_MINUS_A, n)
    elif variant == "a":
        num = _quadratic(-(r + 2) * ALPHA, AlphaPoly((-r, 2 * r, r)))
        core = substitute_lambda(eval_alpha(charpoly_direct(g), 0), num,
                                 ONE_MINUS_A * ONE_MINUS_A, n)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _apply_power(core, pref, m - n)


def cf_rgraph(g: Graph, variant: str = "aalpha") -> BiPoly:
    """Charpoly of the edge-triangle extension (one new vertex per edge,
    joined to both endpoints) of a regular graph."""
    r = _require_regular(g, 1)
    n, m = g.n, g.m
    d1 = LAM - 3 * ALPHA + 1
    if variant == "aalpha":
        num = _quadratic(-(r + 2) * ALPHA, AlphaPoly((-r, 3 * r)))
        core = substitute_lambda(charpoly_direct(g), num, d1, n)
    elif variant == "a":
        num = _quadratic(-2 * (r + 1) * ALPHA, AlphaPoly((-r, 2 * r, 3 * r)))
        core = substitute_lambda(eval_alpha(charpoly_direct(g), 0), num,
                                 ONE_MINUS_A * d1, n)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return _apply_power(core, LAM - 2 * ALPHA, m - n)


def cf_qgraph(g: Graph, variant: str = "line") -> BiPoly:
    """Charpoly of the subdivision-plus-line extension of a regular graph.

    variant "line" routes through the line-graph charpoly; the other two
    compose that step symbolically down to the input charpoly.  All three
    resolve the rational prefactor by exact division.
    """
    r = _require_regular(g, 1)
    n, m = g.n, g.m
    dq = LAM - (r + 1) * ALPHA + 1
    if variant == "line":
        pl = _line_regular_core(g, "aalpha", r)
        num = _quadratic(-(r + 2) * ALPHA, AlphaPoly((-2, 2 * (r + 1))))
        core = substitute_lambda(pl, num, dq, m)
        return _apply_power(core, LAM - r * ALPHA, n - m)
    if variant == "aalpha":
        num = _quadratic(-AlphaPoly((r - 2, r + 2)), AlphaPoly((-r, r * (r + 1))))
        core = substitute_lambda(charpoly_direct(g), num, dq, n)
    elif variant == "a":
        num = _quadratic(-AlphaPoly((r - 2, 2 * (r + 1))),
                         AlphaPoly((-r, r * r, r * (r + 1))))
        core = substitute_lambda(eval_alpha(charpoly_direct(g), 0), num,
                                 ONE_MINUS_A * dq, n)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    num2 = _quadratic(AlphaPoly((2, -(3 * r + 2))),
                      AlphaPoly((0, -2 * r, 2 * r * (r + 1))))
    e = m - n
    if e >= 0:
        return exact_divide(core * num2 ** e, (LAM - r * ALPHA) ** e)
    return exact_divide(core * (LAM - r * ALPHA) ** (-e), num2 ** (-e))


def cf_total(g: Graph, variant: str = "aalpha") -> BiPoly:
    """Total-graph charpoly of a regular graph of degree at least 2.

    Evaluates the determinant of the matrix quadratic that the block
    elimination of the vertex+edge matrix produces; per-eigenvalue radical
    forms of the same result are checked numerically elsewhere.
    """
    r = _require_regular(g, 2)
    n, m = g.n, g.m
    pref = LAM + 2 - 2 * (r + 1) * ALPHA
    if variant == "aalpha":
        base = alpha_matrix(g)
        lin = (r + 3) * ALPHA - 2 * LAM + (r - 3)
        const = _quadratic(AlphaPoly((2 - r, -(r + 2))), AlphaPoly((-r, r * (r + 1))))
    elif variant == "a":
        base = adjacency_matrix(g).scale(BiPoly((ONE_MINUS_A,)))
        lin = 3 * (r + 1) * ALPHA + (r - 3) - 2 * LAM
        const = _quadratic(-AlphaPoly((r - 2, 3 * r + 2)),
                           AlphaPoly((-r, 2 * r * (r - 1), r * (2 * r + 3))))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    quad = base @ base + base.scale(lin) + PolyMatrix.identity(n).scale(const)
    return polymatrix_det(quad) * pref ** (m - n)


# ---------------------------------------------------------------------------
# identity registry and the exact referee
# ---------------------------------------------------------------------------

THEOREM_IDS = (
    "family-spectrum",
    "submatrix-spectrum",
    "complement-regular",
    "pendant-one",
    "pendant-many",
    "coalescence",
    "line-regular-aalpha",
    "line-regular-a",
    "line-semiregular",
    "subdivision-aalpha",
    "subdivision-a",
    "rgraph-aalpha",
    "rgraph-a",
    "qgraph-line",
    "qgraph-aalpha",
    "qgraph-a",
    "total-aalpha",
    "total-a",
    "classical-line-semiregular",
)


def _paths(identity: str, args: tuple):
    """(formula poly, direct poly, description) for one identity instance."""
    if identity == "family-spectrum":
        (spec,) = args
        if spec.kind not in ("complete", "complete_bipartite", "star"):
            raise HypothesisNotMet(f"no spectrum closed form for {spec.kind}")
        return (cf_family_spectrum(spec).expand(),
                charpoly_direct(family_generate(spec)), str(spec))
    if identity == "submatrix-spectrum":
        spec, side = args if len(args) == 2 else (args[0], None)
        if spec.kind not in ("complete", "complete_bipartite", "star"):
            raise HypothesisNotMet(f"no submatrix closed form for {spec.kind}")
        vertex = submatrix_removal_vertex(spec, side)
        return (cf_submatrix_spectrum(spec, side).expand(),
                charpoly_submatrix(family_generate(spec), vertex),
                f"{spec} minus vertex {vertex}")
    if identity == "complement-regular":
        (g,) = args
        return (cf_complement_regular(g),
                charpoly_direct(ops.complement(g)), g.describe())
    if identity == "pendant-one":
        g, v, s = args
        return (cf_pendant_one(g, v, s),
                charpoly_direct(ops.add_pendants_at(g, v, s)),
                f"{g.describe()};{s} pendants at {v}")
    if identity == "pendant-many":
        g, targets = args
        targets = tuple(targets)
        return (cf_pendant_many(g, targets),
                charpoly_direct(ops.attach_pendants(g, targets)),
                f"{g.describe()};pendants at {','.join(map(str, targets))}")
    if identity == "coalescence":
        g, u, h, v = args
        return (cf_coalescence(g, u, h, v),
                charpoly_direct(ops.coalesce(ops.CoalescenceSpec(g, h, u, v))),
                f"({g.describe()})@{u} . ({h.describe()})@{v}")
    (g,) = args
    if identity in ("line-regular-aalpha", "line-regular-a"):
        variant = identity.rsplit("-", 1)[1]
        return (cf_line_regular(g, variant),
                charpoly_direct(ops.line_graph(g)), g.describe())
    if identity == "line-semiregular":
        return (cf_line_semiregular(g),
                charpoly_direct(ops.line_graph(g)), g.describe())
    if identity == "classical-line-semiregular":
        return (classical_line_semiregular(g),
                eval_alpha(charpoly_direct(ops.line_graph(g)), 0), g.describe())
    if identity in ("subdivision-aalpha", "subdivision-a"):
        variant = identity.rsplit("-", 1)[1]
        return (cf_subdivision(g, variant),
                charpoly_direct(ops.subdivision(g)), g.describe())
    if identity in ("rgraph-aalpha", "rgraph-a"):
        variant = identity.rsplit("-", 1)[1]
        return (cf_rgraph(g, variant),
                charpoly_direct(ops.r_graph(g)), g.describe())
    if identity in ("qgraph-line", "qgraph-aalpha", "qgraph-a"):
        variant = identity.rsplit("-", 1)[1]
        return (cf_qgraph(g, variant),
                charpoly_direct(ops.q_graph(g)), g.describe())
    if identity in ("total-aalpha", "total-a"):
        variant = identity.rsplit("-", 1)[1]
        return (cf_total(g, variant),
                charpoly_direct(ops.total_graph(g)), g.describe())
    raise ValueError(f"unknown identity {identity!r}")


def verify_identity(identity: str, *args, label: str | None = None) -> VerdictReport:
    """Run formula path against direct path; all failures are report data."""
    if identity not in THEOREM_IDS:
        raise ValueError(f"unknown identity {identity!r}")
    try:
        formula, direct, desc = _paths(identity, args)
    except HypothesisNotMet as exc:
        return VerdictReport(identity, label or _describe_args(args), "exact",
                             HYPOTHESIS_NOT_MET, None, str(exc))
    except DivisibilityError as exc:
        witness = exc.remainder if exc.remainder is not None else BiPoly.one()
        return VerdictReport(identity, label or _describe_args(args), "exact",
                             FAIL, witness, f"non-exact cancellation: {exc}")
    diff = formula - direct
    if diff:
        return VerdictReport(identity, label or desc, "exact", FAIL, diff)
    return VerdictReport(identity, label or desc, "exact", PASS)


def _describe_args(args: tuple) -> str:
    parts = []
    for a in args:
        if isinstance(a, Graph):
            parts.append(a.describe())
        elif isinstance(a, FamilySpec):
            parts.append(str(a))
        else:
            parts.append(str(a))
    return ";".join(parts)
