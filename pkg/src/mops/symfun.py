"""Symmetric-function expressions and conversions between bases.

A SymExpr is a linear combination of basis elements (monomial m, power-sum
p, or Jack C/J/P) indexed by partitions, with exact scalar coefficients
(Fractions in numeric-alpha mode, RationalFunctions in symbolic mode).
Input expressions with products and powers are ProductExpr trees; the
conversion routines flatten them into single-basis linear combinations.

Variable-count modes: an int fixes the number of variables n (basis
elements indexed by partitions longer than n are zero); GENERIC (None)
means a symbolic number of variables, where products of monomials take
the stabilized coefficients valid for every sufficiently large n.
"""

from fractions import Fraction

from . import cache, partitions
from .errors import DomainError, UnsupportedModeError
from .rational import RationalFunction, rf

GENERIC = None

BASES = ("m", "p", "C", "J", "P")
JACK_BASES = ("C", "J", "P")


class SymExpr:
    """Linear combination of basis elements in a single basis."""

    __slots__ = ("basis", "terms", "nvars")

    def __init__(self, basis, terms, nvars=GENERIC):
        if basis not in BASES:
            raise DomainError("unknown basis %r" % basis)
        if nvars is not GENERIC and nvars < 0:
            raise DomainError("negative variable count")
        clean = {}
        for part, coeff in terms.items():
            part = partitions.as_partition(part)
            if nvars is not GENERIC and len(part) > nvars:
                continue
            if coeff:
                clean[part] = clean[part] + coeff if part in clean else coeff
        self.basis = basis
        self.terms = {p: c for p, c in clean.items() if c}
        self.nvars = nvars

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, SymExpr)
            and self.basis == other.basis
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __repr__(self):
        return "SymExpr(%s)" % self.text()

    def add(self, other):
        if other.basis != self.basis or other.nvars != self.nvars:
            raise DomainError("cannot add expressions in different bases/modes")
        terms = dict(self.terms)
        for part, coeff in other.terms.items():
            terms[part] = terms[part] + coeff if part in terms else coeff
        return SymExpr(self.basis, terms, self.nvars)

    def scale(self, scalar):
        return SymExpr(
            self.basis, {p: c * scalar for p, c in self.terms.items()}, self.nvars
        )

    def coefficient(self, part):
        part = partitions.as_partition(part)
        if part in self.terms:
            return self.terms[part]
        return 0

    def weights(self):
        return sorted({partitions.weight(p) for p in self.terms})

    def weight_component(self, k):
        return SymExpr(
            self.basis,
            {p: c for p, c in self.terms.items() if partitions.weight(p) == k},
            self.nvars,
        )

    def substitute(self, bindings):
        terms = {}
        for part, coeff in self.terms.items():
            if isinstance(coeff, RationalFunction):
                coeff = coeff.substitute(bindings)
            terms[part] = coeff
        return SymExpr(self.basis, terms, self.nvars)

    def sorted_terms(self):
        """Terms in decreasing lexicographic partition order."""
        return [(p, self.terms[p]) for p in sorted(self.terms, reverse=True)]

    def text(self):
        if not self.terms:
            return "0"
        chunks = []
        for part, coeff in self.sorted_terms():
            body = "%s[%s]" % (self.basis, ",".join(str(x) for x in part))
            coeff = rf(coeff) if not isinstance(coeff, RationalFunction) else coeff
            if not part:
                piece = coeff.text()
            elif coeff == 1:
                piece = body
            elif coeff == -1:
                piece = "-" + body
            else:
                piece = coeff.factor_text() + "*" + body
            if not chunks:
                chunks.append(piece)
            elif piece.startswith("-"):
                chunks.append(" - " + piece[1:])
            else:
                chunks.append(" + " + piece)
        return "".join(chunks)

    def to_json(self):
        items = []
        for part, coeff in self.sorted_terms():
            coeff = rf(coeff) if not isinstance(coeff, RationalFunction) else coeff
            items.append({"partition": list(part), "coeff": coeff.to_json()})
        mode = "generic" if self.nvars is GENERIC else self.nvars
        return {"basis": self.basis, "varMode": mode, "terms": items}


# ---------------------------------------------------------------------------
# product-tree input form


class Scalar:
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = value

    def __repr__(self):
        return "Scalar(%r)" % (self.value,)


class Leaf:
    __slots__ = ("basis", "partition")

    def __init__(self, basis, partition):
        if basis not in BASES:
            raise DomainError("unknown basis %r" % basis)
        self.basis = basis
        self.partition = partitions.as_partition(partition)

    def __repr__(self):
        return "Leaf(%s%r)" % (self.basis, list(self.partition))


class Sum:
    __slots__ = ("items",)

    def __init__(self, items):
        self.items = list(items)

    def __repr__(self):
        return "Sum(%r)" % (self.items,)


class Prod:
    __slots__ = ("items",)

    def __init__(self, items):
        self.items = list(items)

    def __repr__(self):
        return "Prod(%r)" % (self.items,)


class Pow:
    __slots__ = ("base", "exponent")

    def __init__(self, base, exponent):
        if exponent < 0:
            raise DomainError("negative powers of basis elements not defined")
        self.base = base
        self.exponent = exponent

    def __repr__(self):
        return "Pow(%r, %d)" % (self.base, self.exponent)


def leaves(node):
    if isinstance(node, Leaf):
        yield node
    elif isinstance(node, (Sum, Prod)):
        for item in node.items:
            yield from leaves(item)
    elif isinstance(node, Pow):
        yield from leaves(node.base)


def has_true_product(node):
    """True when evaluating the tree multiplies two basis elements."""
    if isinstance(node, (Leaf, Scalar)):
        return False
    if isinstance(node, Sum):
        return any(has_true_product(x) for x in node.items)
    if isinstance(node, Pow):
        if isinstance(node.base, Leaf) and node.exponent > 1:
            return True
        return has_true_product(node.base)
    nontrivial = [x for x in node.items if not isinstance(x, Scalar)]
    if len(nontrivial) > 1:
        return True
    return any(has_true_product(x) for x in node.items)


def _length_bound(node):
    """Upper bound on the length of any partition in the expansion."""
    if isinstance(node, Scalar):
        return 0
    if isinstance(node, Leaf):
        return len(node.partition)
    if isinstance(node, Sum):
        return max((_length_bound(x) for x in node.items), default=0)
    if isinstance(node, Prod):
        return sum(_length_bound(x) for x in node.items)
    return _length_bound(node.base) * node.exponent


# ---------------------------------------------------------------------------
# monomial products

_mono_prod_cache = cache.register({})


def _sort_desc(vec):
    return tuple(sorted(vec, reverse=True))


def _distinct_rearrangements(part, n):
    """All distinct length-n vectors whose multiset of entries is part + 0s."""
    items = sorted(part) + [0] * (n - len(part))
    results = []

    def place(remaining, prefix):
        if not remaining:
            results.append(tuple(prefix))
            return
        seen = set()
        for idx in range(len(remaining)):
            v = remaining[idx]
            if v in seen:
                continue
            seen.add(v)
            place(remaining[:idx] + remaining[idx + 1 :], prefix + [v])

    place(items, [])
    return results


def mono_product(lam, mu, n):
    """Expansion of m_lam * m_mu in n variables: dict nu -> int coefficient."""
    lam, mu = partitions.as_partition(lam), partitions.as_partition(mu)
    if len(lam) > n or len(mu) > n:
        return {}
    if partitions.weight(lam) < partitions.weight(mu):
        lam, mu = mu, lam
    key = (lam, mu, n)
    hit = _mono_prod_cache.get(key)
    if hit is not None:
        return hit
    lam_vec = lam + (0,) * (n - len(lam))
    rearr = _distinct_rearrangements(mu, n)
    candidates = {_sort_desc(a + b for a, b in zip(lam_vec, bvec)) for bvec in rearr}
    lam_sorted = _sort_desc(lam_vec)
    out = {}
    for nu in candidates:
        count = 0
        for bvec in rearr:
            diff = tuple(a - b for a, b in zip(nu, bvec))
            if min(diff) >= 0 and _sort_desc(diff) == lam_sorted:
                count += 1
        if count:
            out[tuple(p for p in nu if p)] = count
    _mono_prod_cache[key] = out
    return out


def _mul_m(e1, e2, n):
    terms = {}
    for p1, c1 in e1.terms.items():
        for p2, c2 in e2.terms.items():
            c = c1 * c2
            for nu, mult in mono_product(p1, p2, n).items():
                terms[nu] = terms[nu] + c * mult if nu in terms else c * mult
    return SymExpr("m", terms, e1.nvars)


def m2m(expr, nvars=GENERIC):
    """Flatten a product tree over monomials into a monomial SymExpr."""
    if isinstance(expr, SymExpr):
        if expr.basis != "m":
            raise DomainError("m2m expects monomial input")
        return SymExpr("m", expr.terms, nvars)
    n_eff = nvars if nvars is not GENERIC else max(_length_bound(expr), 1)

    def ev(node):
        if isinstance(node, Scalar):
            return SymExpr("m", {(): node.value}, nvars)
        if isinstance(node, Leaf):
            if node.basis != "m":
                raise DomainError("m2m expects monomial leaves, found %s" % node.basis)
            return SymExpr("m", {node.partition: 1}, nvars)
        if isinstance(node, Sum):
            acc = SymExpr("m", {}, nvars)
            for item in node.items:
                acc = acc.add(ev(item))
            return acc
        if isinstance(node, Prod):
            acc = SymExpr("m", {(): 1}, nvars)
            for item in node.items:
                acc = _mul_m(acc, ev(item), n_eff)
            return acc
        if isinstance(node, Pow):
            acc = SymExpr("m", {(): 1}, nvars)
            base = ev(node.base)
            for _ in range(node.exponent):
                acc = _mul_m(acc, base, n_eff)
            return acc
        raise DomainError("unknown expression node %r" % (node,))

    return ev(expr)


# ---------------------------------------------------------------------------
# power sums

_p2m_cache = cache.register({})


def _power_sum_monomials(lam, n):
    """Monomial expansion of p_lam in n variables: dict nu -> int."""
    lam = partitions.as_partition(lam)
    key = (lam, n)
    hit = _p2m_cache.get(key)
    if hit is not None:
        return hit
    cur = {(0,) * n: 1}
    for r in lam:
        candidates = set()
        for vec in cur:
            for u in set(vec):
                lst = list(vec)
                lst.remove(u)
                candidates.add(_sort_desc(lst + [u + r]))
        new = {}
        for w in candidates:
            total = 0
            for t in set(w):
                if t < r:
                    continue
                lst = list(w)
                lst.remove(t)
                src = _sort_desc(lst + [t - r])
                if src in cur:
                    total += w.count(t) * cur[src]
            if total:
                new[w] = total
        cur = new
    out = {tuple(p for p in vec if p): c for vec, c in cur.items()}
    _p2m_cache[key] = out
    return out


def p2m(expr, nvars=GENERIC):
    """Expand a product tree over power sums into monomials."""
    if isinstance(expr, SymExpr):
        if expr.basis != "p":
            raise DomainError("p2m expects power-sum input")
        flat = expr
    else:

        def ev(node):
            if isinstance(node, Scalar):
                return SymExpr("p", {(): node.value})
            if isinstance(node, Leaf):
                if node.basis != "p":
                    raise DomainError("p2m expects power-sum leaves")
                return SymExpr("p", {node.partition: 1})
            if isinstance(node, Sum):
                acc = SymExpr("p", {})
                for item in node.items:
                    acc = acc.add(ev(item))
                return acc
            if isinstance(node, Prod):
                acc = SymExpr("p", {(): 1})
                for item in node.items:
                    acc = _mul_p(acc, ev(item))
                return acc
            if isinstance(node, Pow):
                acc = SymExpr("p", {(): 1})
                base = ev(node.base)
                for _ in range(node.exponent):
                    acc = _mul_p(acc, base)
                return acc
            raise DomainError("unknown expression node %r" % (node,))

        flat = ev(expr)
    terms = {}
    for lam, coeff in flat.terms.items():
        n_eff = nvars if nvars is not GENERIC else max(partitions.weight(lam), 1)
        if nvars is not GENERIC and len(lam) > 0 and n_eff == 0:
            continue
        for nu, mult in _power_sum_monomials(lam, n_eff).items():
            if nvars is not GENERIC and len(nu) > nvars:
                continue
            c = coeff * mult
            terms[nu] = terms[nu] + c if nu in terms else c
    return SymExpr("m", terms, nvars)


def _mul_p(e1, e2):
    terms = {}
    for p1, c1 in e1.terms.items():
        for p2, c2 in e2.terms.items():
            nu = _sort_desc(p1 + p2)
            c = c1 * c2
            terms[nu] = terms[nu] + c if nu in terms else c
    return SymExpr("p", terms)


_m2p_cache = cache.register({})


def _m_to_p_table(k):
    """Power-sum expansions of every m_lam with |lam| = k."""
    hit = _m2p_cache.get(k)
    if hit is not None:
        return hit
    parts = partitions.partitions_of(k)  # decreasing lex
    table = {}
    for lam in parts:
        mono = _power_sum_monomials(lam, max(k, 1))
        aut = 1
        mult = {}
        for v in lam:
            mult[v] = mult.get(v, 0) + 1
        for m in mult.values():
            for t in range(2, m + 1):
                aut *= t
        # p_lam = aut * m_lam + sum over lex-greater nu of mono[nu] * m_nu
        expansion = {lam: Fraction(1, aut)}
        for nu, c in mono.items():
            if nu == lam:
                continue
            sub = table[nu]  # nu is lex-greater, already solved
            for pmu, pc in sub.items():
                val = expansion.get(pmu, 0) - Fraction(c, aut) * pc
                if val:
                    expansion[pmu] = val
                else:
                    expansion.pop(pmu, None)
        table[lam] = expansion
    _m2p_cache[k] = table
    return table


def m2p(expr):
    """Exact power-sum expansion of an expression over monomials."""
    flat = m2m(expr, GENERIC) if not isinstance(expr, SymExpr) else expr
    if flat.basis != "m":
        raise DomainError("m2p expects monomial input")
    terms = {}
    for lam, coeff in flat.terms.items():
        if not lam:
            terms[()] = terms.get((), 0) + coeff
            continue
        for pmu, pc in _m_to_p_table(partitions.weight(lam))[lam].items():
            c = coeff * pc
            terms[pmu] = terms[pmu] + c if pmu in terms else c
    return SymExpr("p", terms, GENERIC)


def alpha_inner_product(f, g, alpha):
    """Jack inner product on power sums: <p_lam, p_mu> = delta * alpha^l * z."""
    if f.basis != "p" or g.basis != "p":
        raise DomainError("inner product is defined on power-sum expressions")
    total = 0
    for lam, cf in f.terms.items():
        cg = g.terms.get(lam)
        if cg:
            total = total + cf * cg * alpha ** len(lam) * partitions.z_aut(lam)
    return total


# ---------------------------------------------------------------------------
# Jack conversions


def m2jack(alpha, expr, nvars=GENERIC):
    """Rewrite a monomial expression in the Jack C basis by triangular sweep."""
    from . import jack

    flat = expr if isinstance(expr, SymExpr) else m2m(expr, nvars)
    if flat.basis != "m":
        raise DomainError("m2jack expects monomial input")
    out = {}
    for k in flat.weights():
        rest = dict(flat.weight_component(k).terms)
        while rest:
            lam = max(rest)
            coeff = rest.pop(lam)
            expansion = jack.jack_monomial_coefficients(alpha, lam)
            scale = coeff / expansion[lam]
            out[lam] = scale
            for nu, c in expansion.items():
                if nu == lam:
                    continue
                if nvars is not GENERIC and len(nu) > nvars:
                    continue
                val = rest.get(nu, 0) - scale * c
                if val:
                    rest[nu] = val
                else:
                    rest.pop(nu, None)
    return SymExpr("C", out, nvars)


def expand_to_monomials(alpha, expr, nvars=GENERIC):
    """Expand a mixed-basis expression tree into the monomial basis.

    Jack leaves need alpha; power-sum leaves expand through their cached
    monomial tables.  Products with a generic variable count use the
    stabilized coefficients (valid for all sufficiently large n).
    """
    from . import jack

    if isinstance(expr, SymExpr):
        expr = Sum([Prod([Scalar(c), Leaf(expr.basis, p)]) for p, c in expr.sorted_terms()])
    n_eff = nvars if nvars is not GENERIC else max(_length_bound(expr), 1)

    def ev(node):
        if isinstance(node, Scalar):
            return SymExpr("m", {(): node.value}, nvars)
        if isinstance(node, Leaf):
            if node.basis == "m":
                return SymExpr("m", {node.partition: 1}, nvars)
            if node.basis == "p":
                return p2m(SymExpr("p", {node.partition: 1}), nvars)
            if alpha is None:
                raise DomainError("Jack-basis leaves need alpha")
            return jack.jack_expand(alpha, node.partition, node.basis, nvars)
        if isinstance(node, Sum):
            acc = SymExpr("m", {}, nvars)
            for item in node.items:
                acc = acc.add(ev(item))
            return acc
        if isinstance(node, Prod):
            acc = SymExpr("m", {(): 1}, nvars)
            for item in node.items:
                acc = _mul_m(acc, ev(item), n_eff)
            return acc
        if isinstance(node, Pow):
            acc = SymExpr("m", {(): 1}, nvars)
            base = ev(node.base)
            for _ in range(node.exponent):
                acc = _mul_m(acc, base, n_eff)
            return acc
        raise DomainError("unknown expression node %r" % (node,))

    return ev(expr)


def jack2jack(alpha, expr, nvars=GENERIC):
    """Flatten an expression over Jack leaves into the Jack C basis."""
    if isinstance(expr, SymExpr):
        if expr.basis not in JACK_BASES:
            raise DomainError("jack2jack expects Jack-basis input")
    else:
        for leaf in leaves(expr):
            if leaf.basis == "p":
                raise DomainError("jack2jack expects Jack or monomial leaves")
        if nvars is GENERIC and has_true_product(expr):
            raise UnsupportedModeError(
                "products of Jack polynomials need a numeric variable count"
            )
    return m2jack(alpha, expand_to_monomials(alpha, expr, nvars), nvars)


# ---------------------------------------------------------------------------
# numeric evaluation


def eval_numeric(expr, xs, alpha=None):
    """Value of the symmetric polynomial at the point xs.

    Coefficients must be fully bound; Jack bases additionally need the
    numeric alpha that defines them.
    """
    from . import jack

    xs = list(xs)
    n = len(xs)
    if expr.nvars is not GENERIC and expr.nvars != n:
        raise DomainError("expression uses %r variables, point has %d" % (expr.nvars, n))
    if expr.basis in JACK_BASES:
        if alpha is None:
            raise DomainError("numeric Jack evaluation needs alpha")
        mono = SymExpr("m", {}, n)
        for part, coeff in expr.terms.items():
            mono = mono.add(jack.jack_expand(alpha, part, expr.basis, n).scale(coeff))
        expr = mono
    elif expr.basis == "p":
        expr = p2m(expr, n)
    total = 0
    for part, coeff in expr.terms.items():
        if isinstance(coeff, RationalFunction):
            free = coeff.free_parameters()
            if free:
                raise DomainError("unbound parameters: %s" % ", ".join(free))
            coeff = coeff.to_fraction()
        value = 0
        for vec in _distinct_rearrangements(part, n):
            term = 1
            for x, e in zip(xs, vec):
                if e:
                    term = term * x**e
            value += term
        total = total + coeff * value
    return total
