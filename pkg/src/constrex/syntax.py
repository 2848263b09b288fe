"""Expression environments, terms, boolean formulas and constrained expressions.

Mixed words are plain strings over the symbol and variable alphabets (both
restricted to single characters), with "" playing the role of the empty word.
Terms, formulas and expressions are immutable dataclass trees; every operation
here is a pure function, so values can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Union

from .errors import ConfigError, PreconditionError

# Internal names of the two function symbols every environment carries.
CAT = "·"
EPSILON = "ε"

RESERVED_NAMES = frozenset({"eps", "empty", "true", "false"})


# ---------------------------------------------------------------------------
# boolean operator registry (shared by formula connectives and Bool nodes)

TRUE, FALSE, NOT, AND, OR, IMPLIES = "true", "false", "not", "and", "or", "implies"

_CONNECTIVES: dict = {
    TRUE: (0, lambda: True),
    FALSE: (0, lambda: False),
    NOT: (1, lambda p: not p),
    AND: (2, lambda p, q: p and q),
    OR: (2, lambda p, q: p or q),
    IMPLIES: (2, lambda p, q: (not p) or q),
}


def register_connective(tag: str, arity: int, truth: Callable) -> None:
    """Register a k-ary boolean operator usable in Conn and Bool nodes."""
    _CONNECTIVES[tag] = (arity, truth)


def connective(tag: str):
    try:
        return _CONNECTIVES[tag]
    except KeyError:
        raise ConfigError("unknown boolean operator %r" % tag)


# ---------------------------------------------------------------------------
# environments


@dataclass(frozen=True, eq=False)
class Environment:
    """A 4-tuple (symbols, variables, predicates, functions).

    Symbols and variables are single characters; `eps` and the catenation
    symbol are implicitly registered as 0-ary/2-ary functions and must not be
    redeclared. Predicate and function names share one namespace with the
    letters and the keywords.
    """

    symbols: tuple
    variables: tuple = ()
    predicates: Mapping[str, int] = field(default_factory=dict)
    functions: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.symbols:
            raise ConfigError("symbol alphabet must be nonempty")
        for c in self.symbols + self.variables:
            if len(c) != 1:
                raise ConfigError("letters must be single characters: %r" % c)
        if len(set(self.symbols)) != len(self.symbols):
            raise ConfigError("duplicate symbol in alphabet")
        if len(set(self.variables)) != len(self.variables):
            raise ConfigError("duplicate variable")
        overlap = set(self.symbols) & set(self.variables)
        if overlap:
            raise ConfigError("symbols and variables overlap: %s" % sorted(overlap))
        letters = set(self.symbols) | set(self.variables)
        names = list(self.predicates) + list(self.functions)
        if len(set(names)) != len(names):
            raise ConfigError("predicate and function names must be disjoint")
        for name, arity in list(self.predicates.items()) + list(self.functions.items()):
            if name in RESERVED_NAMES or name in letters:
                raise ConfigError("name %r collides with a letter or keyword" % name)
            if arity < 0:
                raise ConfigError("negative arity for %r" % name)

    # letter classification ------------------------------------------------

    def is_symbol(self, c: str) -> bool:
        return c in self.symbols

    def is_variable(self, c: str) -> bool:
        return c in self.variables

    def is_letter(self, c: str) -> bool:
        return c in self.symbols or c in self.variables

    def check_word(self, alpha: str) -> str:
        for c in alpha:
            if not self.is_letter(c):
                raise ConfigError("%r is not a letter of the environment" % c)
        return alpha

    def letter_key(self, word: str) -> tuple:
        """Position key implementing the declared lexicographic order."""
        order = self.symbols + self.variables
        return tuple(order.index(c) for c in word)

    def function_arity(self, name: str) -> int:
        if name == CAT:
            return 2
        if name == EPSILON or name in self.symbols:
            return 0
        if name in self.functions:
            return self.functions[name]
        raise ConfigError("unknown function symbol %r" % name)

    def predicate_arity(self, name: str) -> int:
        if name in self.predicates:
            return self.predicates[name]
        raise ConfigError("unknown predicate symbol %r" % name)


# ---------------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class App:
    fn: str
    args: tuple = ()


Term = Union[Var, App]

EPS_TERM = App(EPSILON)


def cat_term(left: Term, right: Term) -> Term:
    return App(CAT, (left, right))


def term_of_word(env: Environment, w: str) -> Term:
    """Right-nested catenation term denoting the mixed word w."""
    if w == "":
        return EPS_TERM
    head = Var(w[0]) if env.is_variable(w[0]) else App(w[0])
    if len(w) == 1:
        return head
    return App(CAT, (head, term_of_word(env, w[1:])))


def subterms(t: Term) -> frozenset:
    if isinstance(t, Var):
        return frozenset({t})
    out = {t}
    for a in t.args:
        out |= subterms(a)
    return frozenset(out)


def term_variables(t: Term) -> frozenset:
    return frozenset(s.name for s in subterms(t) if isinstance(s, Var))


def check_term(env: Environment, t: Term) -> Term:
    if isinstance(t, Var):
        if not env.is_variable(t.name):
            raise ConfigError("unknown variable %r" % t.name)
        return t
    arity = env.function_arity(t.fn)
    if len(t.args) != arity:
        raise ConfigError("function %r expects %d arguments, got %d"
                          % (t.fn, arity, len(t.args)))
    for a in t.args:
        check_term(env, a)
    return t


# ---------------------------------------------------------------------------
# formulas


@dataclass(frozen=True)
class Atom:
    pred: str
    args: tuple = ()


@dataclass(frozen=True)
class Conn:
    tag: str
    children: tuple = ()


Formula = Union[Atom, Conn]

TOP = Conn(TRUE)
BOT = Conn(FALSE)


def check_formula(env: Environment, phi: Formula) -> Formula:
    if isinstance(phi, Atom):
        if len(phi.args) != env.predicate_arity(phi.pred):
            raise ConfigError("predicate %r expects %d arguments, got %d"
                              % (phi.pred, env.predicate_arity(phi.pred), len(phi.args)))
        for t in phi.args:
            check_term(env, t)
        return phi
    arity, _ = connective(phi.tag)
    if len(phi.children) != arity:
        raise ConfigError("operator %r expects %d operands" % (phi.tag, arity))
    for c in phi.children:
        check_formula(env, c)
    return phi


def formula_variables(phi: Formula) -> frozenset:
    if isinstance(phi, Atom):
        out = frozenset()
        for t in phi.args:
            out |= term_variables(t)
        return out
    out = frozenset()
    for c in phi.children:
        out |= formula_variables(c)
    return out


# ---------------------------------------------------------------------------
# constrained expressions


@dataclass(frozen=True)
class Word:
    letters: str


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Bool:
    op: str
    children: tuple


@dataclass(frozen=True)
class Cat:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Star:
    child: "Expr"


@dataclass(frozen=True)
class Constraint:
    child: "Expr"
    formula: Formula


@dataclass(frozen=True)
class Match:
    word: str
    child: "Expr"


Expr = Union[Word, Empty, Bool, Cat, Star, Constraint, Match]

EPS_WORD = Word("")
EMPTY = Empty()


def sum_expr(left: Expr, right: Expr) -> Bool:
    """The binary sum, the only Bool shape the derivative rules cover."""
    return Bool(OR, (left, right))


def is_sum(e: Expr) -> bool:
    return isinstance(e, Bool) and e.op == OR and len(e.children) == 2


def sum_only(e: Expr) -> bool:
    """True iff every Bool node of e is the binary sum."""
    if isinstance(e, (Word, Empty)):
        return True
    if isinstance(e, Bool):
        return is_sum(e) and all(sum_only(c) for c in e.children)
    if isinstance(e, Cat):
        return sum_only(e.left) and sum_only(e.right)
    if isinstance(e, (Star, Match)):
        return sum_only(e.child)
    if isinstance(e, Constraint):
        return sum_only(e.child)
    raise TypeError(e)


def variables_of(env: Environment, alpha: str) -> frozenset:
    """The variables occurring in a mixed word."""
    return frozenset(c for c in alpha if env.is_variable(c))


def expr_variables(env: Environment, e: Expr) -> frozenset:
    """All variables occurring in e, embedded formulas included."""
    if isinstance(e, Word):
        return variables_of(env, e.letters)
    if isinstance(e, Empty):
        return frozenset()
    if isinstance(e, Bool):
        out = frozenset()
        for c in e.children:
            out |= expr_variables(env, c)
        return out
    if isinstance(e, Cat):
        return expr_variables(env, e.left) | expr_variables(env, e.right)
    if isinstance(e, Star):
        return expr_variables(env, e.child)
    if isinstance(e, Constraint):
        return expr_variables(env, e.child) | formula_variables(e.formula)
    if isinstance(e, Match):
        return variables_of(env, e.word) | expr_variables(env, e.child)
    raise TypeError(e)


def check_expr(env: Environment, e: Expr) -> Expr:
    if isinstance(e, Word):
        env.check_word(e.letters)
    elif isinstance(e, Empty):
        pass
    elif isinstance(e, Bool):
        arity, _ = connective(e.op)
        if len(e.children) != arity:
            raise ConfigError("operator %r expects %d operands" % (e.op, arity))
        for c in e.children:
            check_expr(env, c)
    elif isinstance(e, Cat):
        check_expr(env, e.left)
        check_expr(env, e.right)
    elif isinstance(e, Star):
        check_expr(env, e.child)
    elif isinstance(e, Constraint):
        check_expr(env, e.child)
        check_formula(env, e.formula)
    elif isinstance(e, Match):
        env.check_word(e.word)
        check_expr(env, e.child)
    else:
        raise TypeError(e)
    return e


# ---------------------------------------------------------------------------
# substitution

Assumption = tuple  # (variable, replacement word); replacement is "" or "a"+x


def subst_word(alpha: str, x: str, w: str) -> str:
    return alpha.replace(x, w)


def subst_term(env: Environment, t: Term, x: str, w: str) -> Term:
    if isinstance(t, Var):
        return term_of_word(env, w) if t.name == x else t
    args = tuple(subst_term(env, a, x, w) for a in t.args)
    if t.fn == CAT:
        # A child that became epsilon through this substitution is collapsed,
        # so substituted word arguments stay word-shaped (the evaluation is
        # unchanged: catenation with the empty word is the identity). Children
        # that already were epsilon are left alone, keeping the substitution
        # an identity on terms without the variable.
        left, right = args
        if left == EPS_TERM and t.args[0] != EPS_TERM:
            return right
        if right == EPS_TERM and t.args[1] != EPS_TERM:
            return left
    return App(t.fn, args)


def subst_formula(env: Environment, phi: Formula, x: str, w: str) -> Formula:
    if isinstance(phi, Atom):
        return Atom(phi.pred, tuple(subst_term(env, t, x, w) for t in phi.args))
    return Conn(phi.tag, tuple(subst_formula(env, c, x, w) for c in phi.children))


def subst_expr(env: Environment, e: Expr, x: str, w: str) -> Expr:
    if isinstance(e, Word):
        return Word(subst_word(e.letters, x, w))
    if isinstance(e, Empty):
        return e
    if isinstance(e, Bool):
        return Bool(e.op, tuple(subst_expr(env, c, x, w) for c in e.children))
    if isinstance(e, Cat):
        return Cat(subst_expr(env, e.left, x, w), subst_expr(env, e.right, x, w))
    if isinstance(e, Star):
        return Star(subst_expr(env, e.child, x, w))
    if isinstance(e, Constraint):
        return Constraint(subst_expr(env, e.child, x, w),
                          subst_formula(env, e.formula, x, w))
    if isinstance(e, Match):
        return Match(subst_word(e.word, x, w), subst_expr(env, e.child, x, w))
    raise TypeError(e)


def substitute(env: Environment, entity, x: str, w: str):
    """Substitute x by the mixed word w in a word, term, formula or expression."""
    if isinstance(entity, str):
        return subst_word(entity, x, w)
    if isinstance(entity, (Var, App)):
        return subst_term(env, entity, x, w)
    if isinstance(entity, (Atom, Conn)):
        return subst_formula(env, entity, x, w)
    return subst_expr(env, entity, x, w)


def check_subst_set(X: Iterable[Assumption]) -> frozenset:
    """Validate the functional and non-crossing conditions."""
    X = frozenset(X)
    seen = set()
    for x, _w in X:
        if x in seen:
            raise PreconditionError("substitution set is not functional on %r" % x)
        seen.add(x)
    for x, _w in X:
        for y, w2 in X:
            if x != y and x in w2:
                raise PreconditionError(
                    "substitution set is crossing: %r occurs in %r" % (x, w2))
    return X


def apply_subst_set(env: Environment, entity, X: Iterable[Assumption]):
    """Apply a functional non-crossing set of assumptions in ascending order."""
    X = check_subst_set(X)
    for x, w in sorted(X, key=lambda p: (env.letter_key(p[0]), env.letter_key(p[1]))):
        entity = substitute(env, entity, x, w)
    return entity


# ---------------------------------------------------------------------------
# pretty printing


def word_str(alpha: str) -> str:
    return alpha if alpha else "eps"


def _term_pieces(t: Term) -> list:
    """Right catenation spine of t."""
    out = []
    while isinstance(t, App) and t.fn == CAT:
        out.append(t.args[0])
        t = t.args[1]
    out.append(t)
    return out


def term_str(t: Term) -> str:
    if isinstance(t, Var):
        return t.name
    if t.fn == CAT:
        pieces = []
        for u in _term_pieces(t):
            s = term_str(u)
            if isinstance(u, App) and u.fn == CAT:
                s = "(" + s + ")"
            pieces.append(s)
        out = pieces[0]
        for prev, cur in zip(pieces, pieces[1:]):
            tight = len(prev) == 1 and len(cur) == 1
            if prev[-1].isalnum() and cur[0].isalnum() and not tight:
                out += " " + cur
            else:
                out += cur
        return out
    if t.fn == EPSILON:
        return "eps"
    if not t.args:
        return t.fn
    return "%s(%s)" % (t.fn, ", ".join(term_str(a) for a in t.args))


_F_IMPLIES, _F_OR, _F_AND, _F_NOT, _F_ATOM = 1, 2, 3, 4, 5


def _formula_level(phi: Formula) -> int:
    if isinstance(phi, Atom):
        return _F_ATOM
    return {IMPLIES: _F_IMPLIES, OR: _F_OR, AND: _F_AND, NOT: _F_NOT}.get(phi.tag, _F_ATOM)


def formula_str(phi: Formula, _level: int = 0) -> str:
    own = _formula_level(phi)
    if isinstance(phi, Atom):
        s = phi.pred if not phi.args else \
            "%s(%s)" % (phi.pred, ", ".join(term_str(t) for t in phi.args))
    elif phi.tag in (TRUE, FALSE):
        s = phi.tag
    elif phi.tag == NOT:
        s = "!" + formula_str(phi.children[0], _F_NOT)
    elif phi.tag == AND:
        s = "%s && %s" % (formula_str(phi.children[0], _F_AND),
                          formula_str(phi.children[1], _F_AND + 1))
    elif phi.tag == OR:
        s = "%s || %s" % (formula_str(phi.children[0], _F_OR),
                          formula_str(phi.children[1], _F_OR + 1))
    elif phi.tag == IMPLIES:
        s = "%s -> %s" % (formula_str(phi.children[0], _F_IMPLIES + 1),
                          formula_str(phi.children[1], _F_IMPLIES))
    else:
        s = "%s(%s)" % (phi.tag, ", ".join(formula_str(c) for c in phi.children))
        own = _F_ATOM
    if own < _level:
        return "(" + s + ")"
    return s


_E_CONSTRAINT, _E_MATCH, _E_SUM, _E_CAT, _E_STAR, _E_ATOM = 1, 2, 3, 4, 5, 6


def _expr_level(e: Expr) -> int:
    if isinstance(e, Constraint):
        return _E_CONSTRAINT
    if isinstance(e, Match):
        return _E_MATCH
    if is_sum(e):
        return _E_SUM
    if isinstance(e, Cat):
        return _E_CAT
    if isinstance(e, Star):
        return _E_STAR
    return _E_ATOM


def _cat_factors(e: Expr) -> list:
    if isinstance(e, Cat):
        return _cat_factors(e.left) + _cat_factors(e.right)
    return [e]


def expr_str(e: Expr, _level: int = 0) -> str:
    own = _expr_level(e)
    if isinstance(e, Word):
        s = word_str(e.letters)
    elif isinstance(e, Empty):
        s = "empty"
    elif isinstance(e, Star):
        child = e.child
        cs = expr_str(child, 0)
        atomic = isinstance(child, Star) or isinstance(child, Empty) or \
            (isinstance(child, Word) and len(child.letters) == 1)
        s = (cs if atomic else "(" + cs + ")") + "*"
    elif isinstance(e, Cat):
        parts = []
        for f in _cat_factors(e):
            fs = expr_str(f, 0)
            if _expr_level(f) < _E_STAR and not isinstance(f, Word):
                fs = "(" + fs + ")"
            parts.append(fs)
        s = " ".join(parts)
    elif is_sum(e):
        s = "%s + %s" % (expr_str(e.children[0], _E_SUM),
                         expr_str(e.children[1], _E_SUM + 1))
    elif isinstance(e, Bool):
        s = "%s(%s)" % (e.op, ", ".join(expr_str(c) for c in e.children))
        own = _E_ATOM
    elif isinstance(e, Match):
        s = "%s -| %s" % (word_str(e.word), expr_str(e.child, _E_MATCH))
    elif isinstance(e, Constraint):
        s = "%s | %s" % (expr_str(e.child, _E_MATCH), formula_str(e.formula))
    else:
        raise TypeError(e)
    if own < _level:
        return "(" + s + ")"
    return s


def subst_set_str(env: Environment, X: Iterable[Assumption]) -> str:
    pairs = sorted(X, key=lambda p: (env.letter_key(p[0]), env.letter_key(p[1])))
    return "{%s}" % ",".join("(%s,%s)" % (x, word_str(w)) for x, w in pairs)


for _cls in (Var, App):
    _cls.__str__ = lambda self: term_str(self)
for _cls in (Atom, Conn):
    _cls.__str__ = lambda self: formula_str(self)
for _cls in (Word, Empty, Bool, Cat, Star, Constraint, Match):
    _cls.__str__ = lambda self: expr_str(self)
