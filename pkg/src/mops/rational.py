"""Exact rational functions over a fixed, closed parameter set.

The field elements are ratios of sparse multivariate polynomials with
integer coefficients in the parameters a, n, g, g1, g2, r (a is the Jack
parameter, n the symbolic variable count, g / g1 / g2 the Laguerre and
Jacobi weight exponents, r an internal formal variable).  Polynomials are
dicts mapping exponent 6-tuples to nonzero ints.

Every RationalFunction is canonical: gcd(num, den) is a unit (polynomial
gcd computed by content-primitive recursion on the fixed variable order),
and the denominator's leading coefficient under graded lex order is
positive.  Equality and hashing are therefore structural.
"""

from fractions import Fraction
from math import gcd as _int_gcd

from .errors import DomainError, PoleError

PARAMS = ("a", "n", "g", "g1", "g2", "r")
NPARAMS = len(PARAMS)
_PINDEX = {p: i for i, p in enumerate(PARAMS)}
_ZEXP = (0,) * NPARAMS

# ---------------------------------------------------------------------------
# raw polynomial helpers (dict exponent-tuple -> nonzero int)


def _p_const(c):
    return {_ZEXP: c} if c else {}


_P_ONE = _p_const(1)


def _p_is_const(p):
    return not p or (len(p) == 1 and _ZEXP in p)


def _p_add(p, q):
    if not p:
        return dict(q)
    if not q:
        return dict(p)
    out = dict(p)
    for exp, c in q.items():
        s = out.get(exp, 0) + c
        if s:
            out[exp] = s
        else:
            out.pop(exp, None)
    return out


def _p_neg(p):
    return {exp: -c for exp, c in p.items()}


def _p_scale(p, c):
    if c == 0:
        return {}
    if c == 1:
        return dict(p)
    return {exp: c * v for exp, v in p.items()}


def _p_mul(p, q):
    if not p or not q:
        return {}
    if _p_is_const(p):
        return _p_scale(q, p[_ZEXP])
    if _p_is_const(q):
        return _p_scale(p, q[_ZEXP])
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            exp = tuple(a + b for a, b in zip(e1, e2))
            s = out.get(exp, 0) + c1 * c2
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
    return out


def _graded_lex_key(exp):
    return (sum(exp), exp)


def _p_lead_coeff(p):
    """Coefficient of the graded-lex greatest term."""
    return p[max(p, key=_graded_lex_key)]


def _p_content(p):
    g = 0
    for c in p.values():
        g = _int_gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def _p_divexact_int(p, c):
    if c == 1:
        return p
    return {exp: v // c for exp, v in p.items()}


def _p_divexact(p, d):
    """Exact polynomial division; raises if d does not divide p."""
    if not p:
        return {}
    if _p_is_const(d):
        c = d[_ZEXP]
        out = {}
        for exp, v in p.items():
            q, rem = divmod(v, c)
            if rem:
                raise ArithmeticError("inexact constant division")
            out[exp] = q
        return out
    lead = max(d, key=_graded_lex_key)
    lead_c = d[lead]
    rest = dict(p)
    out = {}
    while rest:
        lt = max(rest, key=_graded_lex_key)
        exp_q = tuple(a - b for a, b in zip(lt, lead))
        if any(e < 0 for e in exp_q):
            raise ArithmeticError("inexact polynomial division")
        cq, rem = divmod(rest[lt], lead_c)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        out[exp_q] = cq
        for e2, c2 in d.items():
            exp = tuple(a + b for a, b in zip(exp_q, e2))
            s = rest.get(exp, 0) - cq * c2
            if s:
                rest[exp] = s
            else:
                rest.pop(exp, None)
    return out


def _p_active_vars(p):
    active = set()
    for exp in p:
        for i, e in enumerate(exp):
            if e:
                active.add(i)
    return active


def _v_deg(p, v):
    return max((exp[v] for exp in p), default=0)


def _v_decompose(p, v):
    """Map v-degree -> coefficient polynomial (with the v slot zeroed)."""
    out = {}
    for exp, c in p.items():
        d = exp[v]
        reduced = exp[:v] + (0,) + exp[v + 1 :]
        out.setdefault(d, {})[reduced] = c
    return out


def _v_compose(parts, v):
    out = {}
    for d, coeff in parts.items():
        for exp, c in coeff.items():
            out[exp[:v] + (d,) + exp[v + 1 :]] = c
    return out


def _v_content(p, v):
    parts = _v_decompose(p, v)
    g = {}
    for coeff in parts.values():
        g = _p_gcd(g, coeff)
        if _p_is_const(g) and g.get(_ZEXP) == 1:
            return g
    return g


def _v_shift(p, v, d):
    return {exp[:v] + (exp[v] + d,) + exp[v + 1 :]: c for exp, c in p.items()}


def _pseudo_rem(A, B, v):
    """Pseudo-remainder of A by B in the variable v."""
    db = _v_deg(B, v)
    lead_B = {e[:v] + (0,) + e[v + 1 :]: c for e, c in B.items() if e[v] == db}
    R = A
    while R and _v_deg(R, v) >= db:
        dr = _v_deg(R, v)
        lead_R = {e[:v] + (0,) + e[v + 1 :]: c for e, c in R.items() if e[v] == dr}
        R = _p_add(_p_mul(lead_B, R), _p_neg(_p_mul(lead_R, _v_shift(B, v, dr - db))))
    return R


def _p_positive(p):
    if p and _p_lead_coeff(p) < 0:
        return _p_neg(p)
    return p


def _p_quotient(p, d):
    """Exact quotient p / d, or None when d does not divide p."""
    try:
        return _p_divexact(p, d)
    except ArithmeticError:
        return None


def _p_maxnorm(p):
    return max(abs(c) for c in p.values())


def _p_eval_var(p, v, xi):
    """Substitute the integer xi for variable v."""
    out = {}
    for exp, c in p.items():
        e = exp[v]
        key = exp[:v] + (0,) + exp[v + 1 :]
        val = c * xi**e if e else c
        s = out.get(key, 0) + val
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _p_eval_int(p, point):
    """Evaluate at an all-integer point; point maps var index -> int."""
    total = 0
    for exp, c in p.items():
        term = c
        for i, e in enumerate(exp):
            if e:
                term *= point[i] ** e
        total += term
    return total


def _balanced_digit(p, xi):
    """Balanced remainder of every coefficient mod xi; returns (digit, rest)."""
    digit = {}
    rest = {}
    half = xi // 2
    for exp, c in p.items():
        r = c % xi
        if r > half:
            r -= xi
        if r:
            digit[exp] = r
        q = (c - r) // xi
        if q:
            rest[exp] = q
    return digit, rest


def _heugcd(p, q, depth=0):
    """Heuristic gcd by integer evaluation; None when it gives up."""
    active = _p_active_vars(p) | _p_active_vars(q)
    if not active:
        return _p_const(_int_gcd(_p_content(p), _p_content(q)))
    v = min(active)
    bound = 2 * min(_p_maxnorm(p), _p_maxnorm(q)) + 29
    xi = bound
    for _ in range(6):
        if xi.bit_length() > 4000:
            return None
        pe = _p_eval_var(p, v, xi)
        qe = _p_eval_var(q, v, xi)
        if not pe or not qe:
            xi = xi * 3 + 17
            continue
        ge = _heugcd(pe, qe, depth + 1) if depth < 8 else None
        if ge is None:
            return None
        # rebuild a candidate from balanced base-xi digits of ge
        cand = {}
        t = 0
        ok = True
        while ge:
            digit, ge = _balanced_digit(ge, xi)
            for exp, c in digit.items():
                cand[exp[:v] + (t,) + exp[v + 1 :]] = c
            t += 1
            if t > 400:
                ok = False
                break
        if ok and cand:
            content = _p_content(cand)
            if content > 1:
                cand = _p_divexact_int(cand, content)
            cof_p = _p_quotient(p, cand)
            cof_q = _p_quotient(q, cand) if cof_p is not None else None
            if cof_p is not None and cof_q is not None:
                # guard against accepting a proper divisor of the gcd: a
                # shared cofactor factor would show up as a large common
                # integer divisor at an evaluation point
                suspicious = False
                for base in (3, 5):
                    point = {i: xi if i == v else base + 2 * i for i in range(NPARAMS)}
                    vp = _p_eval_int(cof_p, point)
                    vq = _p_eval_int(cof_q, point)
                    if vp and vq:
                        suspicious = _int_gcd(abs(vp), abs(vq)) > max(2, xi // 2)
                        break
                if not suspicious:
                    ig = _int_gcd(_p_content(p), _p_content(q))
                    return _p_positive(_p_scale(cand, ig))
        xi = xi * 3 + 17
    return None


def _p_gcd(p, q):
    """Polynomial gcd over Z, positive leading coefficient, content included."""
    if not p:
        return _p_positive(dict(q))
    if not q:
        return _p_positive(dict(p))
    if _p_is_const(p) or _p_is_const(q):
        return _p_const(_int_gcd(_p_content(p), _p_content(q)))
    if p == q:
        return _p_positive(dict(p))
    heur = _heugcd(p, q)
    if heur is not None:
        return heur
    active = _p_active_vars(p) | _p_active_vars(q)
    v = min(active)
    cp = _v_content(p, v)
    cq = _v_content(q, v)
    gcont = _p_gcd(cp, cq)
    A = _p_divexact(p, cp)
    B = _p_divexact(q, cq)
    if _v_deg(A, v) < _v_deg(B, v):
        A, B = B, A
    while B:
        R = _pseudo_rem(A, B, v)
        if R:
            R = _p_divexact(R, _v_content(R, v))
        A, B = B, R
    A = _p_divexact(A, _p_const(_p_content(A)))
    return _p_positive(_p_mul(gcont, A))


def _p_substitute(p, vals):
    """Partial evaluation; vals maps var index -> Fraction.

    Returns a dict exponent-tuple -> Fraction (zeros dropped).
    """
    out = {}
    for exp, c in p.items():
        factor = Fraction(c)
        nexp = list(exp)
        for i, val in vals.items():
            e = exp[i]
            if e:
                factor *= val**e
            nexp[i] = 0
        nexp = tuple(nexp)
        s = out.get(nexp, 0) + factor
        if s:
            out[nexp] = s
        else:
            out.pop(nexp, None)
    return out


def _fraction_poly_to_int(p):
    """Scale a Fraction-coefficient poly to int coefficients; returns (poly, L)."""
    L = 1
    for c in p.values():
        L = L * c.denominator // _int_gcd(L, c.denominator)
    return {exp: int(c * L) for exp, c in p.items()}, L


# term order used for display: ascending total degree, then parameters in
# declaration order (a before n before g ...)


def _display_key(exp):
    return (sum(exp), tuple(-e for e in exp))


def _monomial_text(exp, coeff):
    parts = []
    for i, e in enumerate(exp):
        if e == 1:
            parts.append(PARAMS[i])
        elif e > 1:
            parts.append("%s^%d" % (PARAMS[i], e))
    if not parts:
        return str(coeff)
    if coeff == 1:
        return "*".join(parts)
    if coeff == -1:
        return "-" + "*".join(parts)
    return str(coeff) + "*" + "*".join(parts)


def poly_text(p):
    if not p:
        return "0"
    chunks = []
    for exp in sorted(p, key=_display_key):
        text = _monomial_text(exp, p[exp])
        if not chunks:
            chunks.append(text)
        elif text.startswith("-"):
            chunks.append("-" + text[1:])
        else:
            chunks.append("+" + text)
    return "".join(chunks)


class Infinity:
    """Signed infinity marker returned by limit_at_infinity."""

    __slots__ = ("sign",)

    def __init__(self, sign):
        self.sign = sign  # +1, -1 or None when the sign is parameter-dependent

    def __repr__(self):
        return {1: "+infinity", -1: "-infinity", None: "infinity"}[self.sign]

    def __eq__(self, other):
        return isinstance(other, Infinity) and self.sign == other.sign

    def __hash__(self):
        return hash(("Infinity", self.sign))


class RationalFunction:
    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den, _canonical=False):
        if not _canonical:
            num, den = _canonicalize(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_int(c):
        return RationalFunction(_p_const(c), _P_ONE, _canonical=True)

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        return RationalFunction(
            _p_const(fr.numerator), _p_const(fr.denominator), _canonical=True
        )

    # -- predicates ---------------------------------------------------

    @property
    def is_constant(self):
        return _p_is_const(self.num) and _p_is_const(self.den)

    def to_fraction(self):
        if not self.is_constant:
            raise DomainError("not a constant: %s" % self)
        if not self.num:
            return Fraction(0)
        return Fraction(self.num[_ZEXP], self.den[_ZEXP])

    def free_parameters(self):
        """Names of parameters that actually occur."""
        active = _p_active_vars(self.num) | _p_active_vars(self.den)
        return tuple(PARAMS[i] for i in sorted(active))

    def __bool__(self):
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = rf(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(_p_add(self.num, other.num), dict(self.den))
        num = _p_add(_p_mul(self.num, other.den), _p_mul(other.num, self.den))
        return RationalFunction(num, _p_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(_p_neg(self.num), self.den, _canonical=True)

    def __sub__(self, other):
        other = rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(
            _p_mul(self.num, other.num), _p_mul(self.den, other.den)
        )

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise DomainError("division by the zero rational function")
        return RationalFunction(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        other = rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__mul__(other.inverse())

    def __rtruediv__(self, other):
        return self.inverse().__mul__(other)

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------

    def __eq__(self, other):
        other = rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (tuple(sorted(self.num.items())), tuple(sorted(self.den.items())))
            )
        return self._hash

    def __repr__(self):
        return "RationalFunction(%s)" % self.text()

    # -- evaluation ---------------------------------------------------

    def substitute(self, bindings):
        """Partially evaluate at rational parameter values.

        ``bindings`` maps parameter names to ints or Fractions.  Raises
        PoleError when the denominator vanishes at the point.
        """
        vals = {}
        for name, value in bindings.items():
            if name not in _PINDEX:
                raise DomainError("unknown parameter %r" % name)
            vals[_PINDEX[name]] = Fraction(value)
        if not vals:
            return self
        den_f = _p_substitute(self.den, vals)
        if not den_f:
            point = ", ".join(
                "%s=%s" % (name, bindings[name]) for name in sorted(bindings)
            )
            raise PoleError("pole at %s" % point)
        num_f = _p_substitute(self.num, vals)
        num_i, ln = _fraction_poly_to_int(num_f)
        den_i, ld = _fraction_poly_to_int(den_f)
        # num/ln over den/ld
        return RationalFunction(_p_scale(num_i, ld), _p_scale(den_i, ln))

    def __call__(self, **bindings):
        return self.substitute(bindings)

    def to_float(self, **bindings):
        value = self.substitute(bindings) if bindings else self
        return float(value.to_fraction())

    # -- structure ----------------------------------------------------

    def series_coefficients(self, param, degree):
        """Taylor coefficients in ``param`` at 0, orders 0..degree."""
        if param not in _PINDEX:
            raise DomainError("unknown parameter %r" % param)
        v = _PINDEX[param]
        num_by = _v_decompose(self.num, v) if self.num else {}
        den_by = _v_decompose(self.den, v)
        den0 = den_by.get(0)
        if not den0:
            raise PoleError("denominator vanishes identically at %s=0" % param)
        den0_rf = RationalFunction(den0, _P_ONE)
        coeffs = []
        for j in range(degree + 1):
            acc = RationalFunction(num_by.get(j, {}), _P_ONE)
            for i in range(1, j + 1):
                di = den_by.get(i)
                if di:
                    acc = acc - RationalFunction(di, _P_ONE) * coeffs[j - i]
            coeffs.append(acc / den0_rf)
        return coeffs

    def limit_at_infinity(self, param):
        """Limit as ``param`` -> +infinity: a RationalFunction or Infinity."""
        if param not in _PINDEX:
            raise DomainError("unknown parameter %r" % param)
        if not self.num:
            return ZERO
        v = _PINDEX[param]
        dn = _v_deg(self.num, v)
        dd = _v_deg(self.den, v)
        if dn < dd:
            return ZERO
        lead_n = {
            e[:v] + (0,) + e[v + 1 :]: c for e, c in self.num.items() if e[v] == dn
        }
        lead_d = {
            e[:v] + (0,) + e[v + 1 :]: c for e, c in self.den.items() if e[v] == dd
        }
        ratio = RationalFunction(lead_n, lead_d)
        if dn == dd:
            return ratio
        if ratio.is_constant:
            return Infinity(1 if ratio.to_fraction() > 0 else -1)
        return Infinity(None)

    # -- rendering ----------------------------------------------------

    def text(self):
        num = poly_text(self.num)
        if self.den == _P_ONE:
            return num
        if len(self.num) > 1:
            num = "(%s)" % num
        return "%s/(%s)" % (num, poly_text(self.den))

    def factor_text(self):
        """Text form safe to splice into a product with '*'."""
        if self.den == _P_ONE and len(self.num) > 1:
            return "(%s)" % poly_text(self.num)
        return self.text()

    def to_json(self):
        return {"num": poly_text(self.num), "den": poly_text(self.den)}


def _canonicalize(num, den):
    if not den:
        raise DomainError("zero denominator")
    if not num:
        return {}, dict(_P_ONE)
    g = _p_gcd(num, den)
    if not (_p_is_const(g) and g.get(_ZEXP) == 1):
        num = _p_divexact(num, g)
        den = _p_divexact(den, g)
    if _p_lead_coeff(den) < 0:
        num = _p_neg(num)
        den = _p_neg(den)
    return num, den


def rf(x):
    """Coerce ints, Fractions and RationalFunctions into the field."""
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, int):
        return RationalFunction.from_int(x)
    if isinstance(x, Fraction):
        return RationalFunction.from_fraction(x)
    return NotImplemented


def param(name):
    if name not in _PINDEX:
        raise DomainError("unknown parameter %r" % name)
    exp = tuple(1 if i == _PINDEX[name] else 0 for i in range(NPARAMS))
    return RationalFunction({exp: 1}, _P_ONE, _canonical=True)


ZERO = RationalFunction.from_int(0)
ONE = RationalFunction.from_int(1)

ALPHA = param("a")
N = param("n")
GAMMA = param("g")
G1 = param("g1")
G2 = param("g2")
R = param("r")
