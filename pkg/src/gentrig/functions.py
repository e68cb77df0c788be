"""The two-parameter trigonometric and hyperbolic family.

Inverse functions are evaluated through their hypergeometric representations,
switching to complementary incomplete-beta forms where the series argument
would approach 1.  Direct functions invert them with safeguarded Newton
(analytic derivative, bisection fallback inside a maintained bracket).  The
sine is extended to the whole real line by oddness, reflection and
periodicity; the cosine is its derivative, reduced with an explicit sign
table.
"""

import math

from .config import DEFAULT_CONFIG, EvalConfig
from .errors import ConvergenceError, DomainError, UnsupportedOperationError
from .params import FnKind, Params, PrincipalDomain
from .quadrature import integrate, integrate_singular
from .special import gauss_2f1, beta, incomplete_beta_2f1

# x^q above which the large-argument paths take over from the plain series
_LARGE_POWER = 9.0


def _pow(x: float, e: float) -> float:
    """x**e for x >= 0 that saturates at inf instead of raising on overflow."""
    if x == 0.0:
        if e > 0.0:
            return 0.0
        if e == 0.0:
            return 1.0
        return math.inf
    if math.isinf(x):
        return math.inf if e > 0.0 else 0.0
    try:
        return math.pow(x, e)
    except OverflowError:
        return math.inf


def half_pi_pq(params: Params) -> float:
    """Half-period of the generalized sine: (1/q) B(1/q, 1 - 1/p)."""
    return beta(1.0 / params.q, 1.0 - 1.0 / params.p) / params.q


def half_hat_pi_pq(params: Params) -> float:
    """Upper endpoint of the hyperbolic principal domain.

    Equals (1/q) B(1/p - 1/q, 1/q) when p < q and math.inf otherwise (the
    inverse hyperbolic sine is then unbounded).
    """
    p, q = params.p, params.q
    if p < q:
        return beta(1.0 / p - 1.0 / q, 1.0 / q) / q
    return math.inf


def arcsin_pq(params: Params, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Inverse generalized sine: int_0^x (1-t^q)^(-1/p) dt on [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"arcsin requires 0 <= x <= 1, got {x}")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return half_pi_pq(params)
    p, q = params.p, params.q
    sv = gauss_2f1(1.0 / p, 1.0 / q, 1.0 + 1.0 / q, x**q, cfg)
    return x * sv.value


def arccos_pq(params: Params, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Inverse generalized cosine on [0, 1].

    For x^p >= 1/2 the direct hypergeometric representation applies; below
    that the series argument 1 - x^p leaves the fast region, so the value is
    taken as the half-period minus the complementary incomplete beta integral
    (the change-of-variable form of the defining integral).
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"arccos requires 0 <= x <= 1, got {x}")
    if x == 1.0:
        return 0.0
    if x == 0.0:
        return half_pi_pq(params)
    p, q = params.p, params.q
    xp = x**p
    if xp >= 0.5:
        sv = gauss_2f1(1.0, 1.0 + 1.0 / q - 1.0 / p, 1.0 + 1.0 / q, 1.0 - xp, cfg)
        return x ** (p - 1.0) * (1.0 - xp) ** (1.0 / q) * sv.value
    tail = incomplete_beta_2f1(xp, 1.0 - 1.0 / p, 1.0 / q, cfg)
    return half_pi_pq(params) - tail / q


def arcsinh_pq(params: Params, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Inverse hyperbolic sine: int_0^x (1+t^q)^(-1/p) dt for x >= 0.

    math.inf is accepted when p < q (value: the domain endpoint).  Large
    arguments use the complementary incomplete-beta tail (p < q) or a
    binomial tail expansion about t^-q (p >= q).
    """
    if not x >= 0.0:
        raise DomainError(f"arcsinh requires x >= 0, got {x}")
    p, q = params.p, params.q
    if math.isinf(x):
        if p < q:
            return half_hat_pi_pq(params)
        raise DomainError("arcsinh(inf) diverges for p >= q")
    if x == 0.0:
        return 0.0
    xq = _pow(x, q)
    if xq <= 1.0:
        sv = gauss_2f1(1.0 / p, 1.0 / q, 1.0 + 1.0 / q, -xq, cfg)
        return x * sv.value
    if xq <= _LARGE_POWER:
        z = xq / (1.0 + xq)
        sv = gauss_2f1(1.0, 1.0 / p, 1.0 + 1.0 / q, z, cfg)
        return x * (1.0 + xq) ** (-1.0 / p) * sv.value
    if p < q:
        u = 1.0 / (1.0 + xq)
        tail = incomplete_beta_2f1(u, 1.0 / p - 1.0 / q, 1.0 / q, cfg)
        return half_hat_pi_pq(params) - tail / q
    return _arcsinh_large(params, x, cfg)


def _arcsinh_large(params: Params, x: float, cfg: EvalConfig) -> float:
    """Binomial tail of the defining integral, for p >= q and x^q > 2.

    (1+t^q)^(-1/p) = t^(-q/p) sum_k C(-1/p, k) t^(-qk): integrating each
    term from the anchor X = 2^(1/q) (where t^-q <= 1/2) gives a geometric-
    rate series; the k = 0 term degenerates to a logarithm when p = q.
    """
    p, q = params.p, params.q
    anchor = 2.0 ** (1.0 / q)
    total = arcsinh_pq(params, anchor, cfg)
    coeff = 1.0
    for k in range(cfg.max_terms):
        e = 1.0 - q / p - q * k
        if abs(e) < 1e-12:
            piece = math.log(x / anchor)
        else:
            piece = (_pow(x, e) - _pow(anchor, e)) / e
        term = coeff * piece
        total += term
        if k >= 3 and abs(term) <= cfg.rel_tol * max(1.0, abs(total)):
            return total
        coeff *= (-1.0 / p - k) / (k + 1.0)
    raise ConvergenceError("arcsinh binomial tail did not converge", partial=total)


def arccosh_pq(params: Params, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Inverse hyperbolic cosine on [1, inf).

    Uses the hypergeometric representation while its argument 1 - x^-p stays
    moderate; past that, the complementary incomplete-beta tail when p < q,
    and otherwise the series with a quadrature fallback on the defining
    integral (the value is genuinely unbounded for p >= q).
    """
    if not x >= 1.0:
        raise DomainError(f"arccosh requires x >= 1, got {x}")
    p, q = params.p, params.q
    if math.isinf(x):
        return half_hat_pi_pq(params)
    if x == 1.0:
        return 0.0
    xmp = _pow(x, -p)
    if xmp >= 0.1:
        return _arccosh_series(params, x, xmp, cfg)
    if p < q:
        tail = incomplete_beta_2f1(xmp, 1.0 / p - 1.0 / q, 1.0 / q, cfg)
        return half_hat_pi_pq(params) - tail / q
    try:
        return _arccosh_series(params, x, xmp, cfg)
    except ConvergenceError:
        return _arccosh_quadrature(params, x)


def _arccosh_series(params: Params, x: float, xmp: float, cfg: EvalConfig) -> float:
    p, q = params.p, params.q
    sv = gauss_2f1(1.0, 1.0 / p, 1.0 + 1.0 / q, 1.0 - xmp, cfg)
    # (x^p - 1)^(1/q) / x computed through logs to survive huge x^p
    lead = math.exp((math.log1p(-xmp) + p * math.log(x)) / q - math.log(x))
    return lead * sv.value


def _arccosh_quadrature(params: Params, x: float) -> float:
    p, q = params.p, params.q

    def kernel(u: float) -> float:
        # (u^p - 1)^(1/q - 1) u^(p - 2), in log form for very large u
        lu = math.log(u)
        return math.exp((1.0 / q - 1.0) * (p * lu + math.log1p(-_pow(u, -p))) + (p - 2.0) * lu)

    res = integrate_singular(kernel, 1.0, x, "lower", 1.0 / q - 1.0)
    return (p / q) * res.value


def arctam_pq(params: Params, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Inverse of the tangent analogue: int_0^x (1+t^q)^-(1+1/q-1/p) dt.

    For p < q the connection exponent r exceeds 1 and the integral is the
    inverse hyperbolic sine at (r, q); otherwise it is integrated directly.
    """
    if not x >= 0.0:
        raise DomainError(f"arctam requires x >= 0, got {x}")
    if x == 0.0:
        return 0.0
    p, q = params.p, params.q
    if p < q:
        return arcsinh_pq(Params(params.r, q), x, cfg)
    expo = 1.0 + 1.0 / q - 1.0 / p

    def kernel(t: float) -> float:
        return _pow(1.0 + _pow(t, q), -expo)

    return integrate(kernel, 0.0, x, 1e-11).value


def arctamh_pq(params: Params, x: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Inverse of the hyperbolic tangent analogue on [0, 1).

    Connection route (generalized arcsine at (r, q)) when p < q, direct
    quadrature of the defining kernel otherwise.
    """
    if not 0.0 <= x < 1.0:
        raise DomainError(f"arctamh requires 0 <= x < 1, got {x}")
    if x == 0.0:
        return 0.0
    p, q = params.p, params.q
    if p < q:
        return arcsin_pq(Params(params.r, q), x, cfg)
    expo = 1.0 + 1.0 / q - 1.0 / p

    def kernel(t: float) -> float:
        return (1.0 - t**q) ** (-expo)

    return integrate(kernel, 0.0, x, 1e-11).value


# ---------------------------------------------------------------------------
# direct functions


def _invert(fwd, deriv, y: float, lo: float, hi: float, cfg: EvalConfig) -> float:
    """Solve fwd(x) = y for increasing fwd on the bracket [lo, hi].

    Newton steps with the analytic derivative; any step that leaves the
    bracket, is non-finite, or follows a step that failed to shrink the
    residual is replaced by bisection (geometric for very wide brackets).
    """
    a, b = lo, hi
    x = 0.5 * (lo + hi)
    prev_resid = math.inf
    newton_ok = True
    for _ in range(cfg.max_iters):
        resid = fwd(x) - y
        if abs(resid) <= cfg.abs_tol:
            return x
        if resid < 0.0:
            a = x
        else:
            b = x
        if abs(resid) > 0.9 * prev_resid:
            newton_ok = False
        prev_resid = abs(resid)
        step_x = None
        if newton_ok:
            d = deriv(x)
            if d > 0.0 and math.isfinite(d):
                cand = x - resid / d
                if a < cand < b and math.isfinite(cand):
                    step_x = cand
        if step_x is None:
            if a > 0.0 and b / a > 16.0:
                step_x = math.sqrt(a * b)
            else:
                step_x = 0.5 * (a + b)
            newton_ok = True
        x = step_x
    raise ConvergenceError(f"inversion stalled at residual {prev_resid}", partial=x)


def _sin_base(params: Params, t: float, cfg: EvalConfig) -> float:
    """Invert the generalized arcsine for t in [0, half-period]."""
    if t == 0.0:
        return 0.0
    hp = half_pi_pq(params)
    if t >= hp:
        return 1.0
    p, q = params.p, params.q
    return _invert(
        lambda x: arcsin_pq(params, x, cfg),
        lambda x: (1.0 - x**q) ** (-1.0 / p),
        t,
        0.0,
        1.0,
        cfg,
    )


def _reduce_sin(params: Params, y: float):
    """(sign, t) with t in [0, half-period] and sin(y) = sign * sin(t).

    Built from fmod (exact) on |y| so that negating y flips only the sign.
    """
    hp = half_pi_pq(params)
    period = 4.0 * hp
    sign = -1.0 if y < 0.0 else 1.0
    t = math.fmod(abs(y), period)
    if t >= 2.0 * hp:
        sign = -sign
        t -= 2.0 * hp
    if t > hp:
        t = 2.0 * hp - t
    return sign, t


def sin_pq(params: Params, y: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Generalized sine on the whole real line."""
    sign, t = _reduce_sin(params, y)
    return sign * _sin_base(params, t, cfg)


def cos_pq(params: Params, y: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Generalized cosine (derivative of the extended sine) on the real line."""
    hp = half_pi_pq(params)
    period = 4.0 * hp
    t = math.fmod(abs(y), period)
    if t < hp:
        sign, tr = 1.0, t
    elif t < 2.0 * hp:
        sign, tr = -1.0, 2.0 * hp - t
    elif t < 3.0 * hp:
        sign, tr = -1.0, t - 2.0 * hp
    else:
        sign, tr = 1.0, period - t
    x = _sin_base(params, tr, cfg)
    return sign * (1.0 - x**params.q) ** (1.0 / params.p)


def sinh_pq(params: Params, y: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Hyperbolic sine on its principal domain [0, half_hat_pi_pq)."""
    hh = half_hat_pi_pq(params)
    if not 0.0 <= y < hh:
        raise DomainError(f"sinh requires 0 <= y < {hh}, got {y}")
    if y == 0.0:
        return 0.0
    p, q = params.p, params.q
    lo, hi = 0.0, 1.0
    for _ in range(600):
        if arcsinh_pq(params, hi, cfg) >= y:
            break
        lo = hi
        hi *= 4.0
    else:
        raise ConvergenceError(f"no bracket found for sinh at y={y}", partial=hi)
    return _invert(
        lambda x: arcsinh_pq(params, x, cfg),
        lambda x: _pow(1.0 + _pow(x, q), -1.0 / p),
        y,
        lo,
        hi,
        cfg,
    )


def cosh_pq(params: Params, y: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Hyperbolic cosine (1 + sinh^q)^(1/p) on the principal domain."""
    x = sinh_pq(params, y, cfg)
    return _pow(1.0 + _pow(x, params.q), 1.0 / params.p)


def tam_pq(params: Params, y: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Tangent analogue sin / cos^(p/q) on [0, half-period)."""
    hp = half_pi_pq(params)
    if not 0.0 <= y < hp:
        raise DomainError(f"tam requires 0 <= y < {hp}, got {y}")
    x = _sin_base(params, y, cfg)
    return x * (1.0 - x**params.q) ** (-1.0 / params.q)


def tamh_pq(params: Params, y: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Hyperbolic tangent analogue sinh / cosh^(p/q) on [0, half_hat_pi_pq)."""
    x = sinh_pq(params, y, cfg)
    return x * _pow(1.0 + _pow(x, params.q), -1.0 / params.q)


def derivative_y(kind: FnKind, params: Params, y: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Closed-form y-derivative of a direct kind at an interior point."""
    p, q = params.p, params.q
    dom = principal_domain(kind, params)
    if kind.is_inverse:
        raise UnsupportedOperationError(f"derivative_y supports direct kinds, got {kind}")
    if not dom.lower < y < dom.upper:
        raise DomainError(f"derivative of {kind.value} needs y inside ({dom.lower}, {dom.upper})")
    if kind is FnKind.SIN:
        return cos_pq(params, y, cfg)
    if kind is FnKind.COS:
        x = _sin_base(params, y, cfg)
        c = (1.0 - x**q) ** (1.0 / p)
        if c == 0.0 and p > 2.0:
            raise DomainError("cosine derivative is singular where cos = 0 and p > 2")
        return -(q / p) * x ** (q - 1.0) * c ** (2.0 - p)
    if kind is FnKind.SINH:
        return cosh_pq(params, y, cfg)
    if kind is FnKind.COSH:
        x = sinh_pq(params, y, cfg)
        c = _pow(1.0 + _pow(x, q), 1.0 / p)
        return (q / p) * x ** (q - 1.0) * c ** (2.0 - p)
    if kind is FnKind.TAM:
        t = tam_pq(params, y, cfg)
        return (1.0 + t**q) ** (1.0 + 1.0 / q - 1.0 / p)
    if kind is FnKind.TAMH:
        t = tamh_pq(params, y, cfg)
        return (1.0 - t**q) ** (1.0 + 1.0 / q - 1.0 / p)
    raise UnsupportedOperationError(f"no derivative formula for {kind}")


def principal_domain(kind: FnKind, params: Params) -> PrincipalDomain:
    """Interval on which `kind` is primarily defined (argument side)."""
    hp = half_pi_pq(params)
    hh = half_hat_pi_pq(params)
    table = {
        FnKind.SIN: (0.0, hp, "half-period (1/q)B(1/q, 1-1/p)"),
        FnKind.COS: (0.0, hp, "half-period (1/q)B(1/q, 1-1/p)"),
        FnKind.TAM: (0.0, hp, "half-period (1/q)B(1/q, 1-1/p)"),
        FnKind.SINH: (0.0, hh, "hyperbolic endpoint (1/q)B(1/p-1/q, 1/q)"),
        FnKind.COSH: (0.0, hh, "hyperbolic endpoint (1/q)B(1/p-1/q, 1/q)"),
        FnKind.TAMH: (0.0, hh, "hyperbolic endpoint (1/q)B(1/p-1/q, 1/q)"),
        FnKind.ARCSIN: (0.0, 1.0, "unit interval"),
        FnKind.ARCCOS: (0.0, 1.0, "unit interval"),
        FnKind.ARCSINH: (0.0, math.inf, "half line"),
        FnKind.ARCCOSH: (1.0, math.inf, "half line from 1"),
        FnKind.ARCTAM: (0.0, math.inf, "half line"),
        FnKind.ARCTAMH: (0.0, 1.0, "unit interval, open at 1"),
    }
    lower, upper, desc = table[kind]
    return PrincipalDomain(lower, upper, desc)


def eval_kind(kind: FnKind, params: Params, point: float, cfg: EvalConfig = DEFAULT_CONFIG) -> float:
    """Evaluate any kind (direct or inverse) at a point."""
    dispatch = {
        FnKind.SIN: sin_pq,
        FnKind.COS: cos_pq,
        FnKind.SINH: sinh_pq,
        FnKind.COSH: cosh_pq,
        FnKind.TAM: tam_pq,
        FnKind.TAMH: tamh_pq,
        FnKind.ARCSIN: arcsin_pq,
        FnKind.ARCCOS: arccos_pq,
        FnKind.ARCSINH: arcsinh_pq,
        FnKind.ARCCOSH: arccosh_pq,
        FnKind.ARCTAM: arctam_pq,
        FnKind.ARCTAMH: arctamh_pq,
    }
    return dispatch[kind](params, point, cfg)


def inverse_integrand(kind: FnKind, params: Params):
    """Defining-integral kernel of an inverse kind, as a plain callable.

    Direct kinds map to their inverses.  These kernels feed the quadrature
    oracle when certifying the hypergeometric representations.
    """
    kind = kind.inverse
    p, q = params.p, params.q
    if kind is FnKind.ARCSIN:
        return lambda t: (1.0 - t**q) ** (-1.0 / p)
    if kind is FnKind.ARCCOS:
        return lambda u: (p / q) * (1.0 - u**p) ** (1.0 / q - 1.0) * u ** (p - 2.0)
    if kind is FnKind.ARCSINH:
        return lambda t: _pow(1.0 + _pow(t, q), -1.0 / p)
    if kind is FnKind.ARCCOSH:

        def cosh_kernel(u: float) -> float:
            lu = math.log(u)
            return (p / q) * math.exp(
                (1.0 / q - 1.0) * (p * lu + math.log1p(-_pow(u, -p))) + (p - 2.0) * lu
            )

        return cosh_kernel
    expo = 1.0 + 1.0 / q - 1.0 / p
    if kind is FnKind.ARCTAM:
        return lambda t: _pow(1.0 + _pow(t, q), -expo)
    if kind is FnKind.ARCTAMH:
        return lambda t: (1.0 - t**q) ** (-expo)
    raise UnsupportedOperationError(f"no integrand for {kind}")
