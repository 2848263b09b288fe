"""Brute-force reference implementations for differential testing.

None of these share code with the engines they check: language enumeration
works by length-bounded dynamic programming on the regular expression, and
membership evaluates the language definition directly by splitting the word.
A positive answer always carries the realization or interpretation that
produced it; a negative answer only means "not found within the bound".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

from .semantics import (
    Interpretation, RCat, REmpty, RInter, RLit, RUnion, Realization, Regex,
    eval_formula,
)
from .syntax import (
    Bool, Cat, Constraint, Empty, Environment, Expr, Formula, Match, Star,
    Word, connective, expr_variables, formula_variables,
)


@dataclass
class Bound:
    """Search limits for the bounded oracles."""

    max_word_len: int = 4
    max_realization_len: int = 2
    interpretation_samples: Optional[list] = None


def enumerate_language(rx: Regex, max_len: int) -> frozenset:
    """Exactly the words of length <= max_len denoted by rx."""
    if isinstance(rx, RLit):
        return frozenset({rx.word} if len(rx.word) <= max_len else ())
    if isinstance(rx, REmpty):
        return frozenset()
    if isinstance(rx, RUnion):
        return enumerate_language(rx.left, max_len) | enumerate_language(rx.right, max_len)
    if isinstance(rx, RInter):
        return enumerate_language(rx.left, max_len) & enumerate_language(rx.right, max_len)
    if isinstance(rx, RCat):
        left = enumerate_language(rx.left, max_len)
        right = enumerate_language(rx.right, max_len)
        return frozenset(u + v for u in left for v in right if len(u) + len(v) <= max_len)
    child = enumerate_language(rx.child, max_len)
    out = {""}
    frontier = {""}
    while frontier:
        step = {u + v for u in frontier for v in child
                if v and len(u) + len(v) <= max_len}
        frontier = step - out
        out |= frontier
    return frozenset(out)


def brute_membership_fixed_r(interp: Interpretation, r: Realization,
                             e: Expr, w: str) -> bool:
    """w in the (I,r)-language, by structural recursion over the definition."""
    memo = {}

    def member(node: Expr, word: str) -> bool:
        key = (id(node), word)
        if key in memo:
            return memo[key]
        if isinstance(node, Word):
            out = word == r.realize(node.letters)
        elif isinstance(node, Empty):
            out = False
        elif isinstance(node, Match):
            out = word == r.realize(node.word) and member(node.child, word)
        elif isinstance(node, Bool):
            _, truth = connective(node.op)
            out = bool(truth(*(member(c, word) for c in node.children)))
        elif isinstance(node, Cat):
            out = any(member(node.left, word[:i]) and member(node.right, word[i:])
                      for i in range(len(word) + 1))
        elif isinstance(node, Star):
            # Nonempty leading factors suffice: any star decomposition can
            # drop its empty factors, so the recursion terminates.
            if word == "":
                out = True
            else:
                out = any(member(node.child, word[:i]) and member(node, word[i:])
                          for i in range(1, len(word) + 1))
        elif isinstance(node, Constraint):
            out = eval_formula(interp, r, node.formula) and member(node.child, word)
        else:
            raise TypeError(node)
        memo[key] = out
        return out

    return member(e, w)


def words_upto(symbols: Tuple[str, ...], max_len: int):
    for n in range(max_len + 1):
        for tup in itertools.product(symbols, repeat=n):
            yield "".join(tup)


def realizations(env: Environment, variables: Iterable[str], max_len: int):
    """Every realization of the given variables with images up to max_len."""
    variables = sorted(variables)
    images = list(words_upto(env.symbols, max_len))
    for combo in itertools.product(images, repeat=len(variables)):
        yield Realization(env, dict(zip(variables, combo)))


def brute_membership_fixed_I(interp: Interpretation, e: Expr, w: str,
                             bound: Optional[Bound] = None) -> Optional[Realization]:
    """A realization accepting w, or None (= not found within the bound)."""
    bound = bound or Bound()
    env = interp.env
    for r in realizations(env, expr_variables(env, e), bound.max_realization_len):
        if brute_membership_fixed_r(interp, r, e, w):
            return r
    return None


_PRED_CANDIDATES = {1: ["nonempty"], 2: ["eq", "leneq", "lenleq", "reveq"]}
_FN_CANDIDATES = {1: ["rev", "projA"], 2: ["cat", "revcat", "dupcat"]}


def sample_interpretations(env: Environment, limit: int = 64) -> list:
    """The cross product of arity-matched builtin bindings, capped and ordered.

    Symbols with no builtin of their arity fall back to an empty finite table
    (both polarities for predicates, argument catenation for functions).
    """
    from .semantics import FiniteRelation

    names = []
    options = []
    for name, arity in sorted(env.predicates.items()):
        names.append(("p", name))
        options.append(_PRED_CANDIDATES.get(
            arity, [FiniteRelation(frozenset()), FiniteRelation(frozenset(), True)]))
    for name, arity in sorted(env.functions.items()):
        names.append(("f", name))
        options.append(_FN_CANDIDATES.get(arity, ["argcat"]))
    out = []
    for combo in itertools.islice(itertools.product(*options), limit):
        predicates = {}
        functions = {}
        for (kind, name), choice in zip(names, combo):
            if kind == "p":
                predicates[name] = choice
            else:
                functions[name] = choice
        out.append(Interpretation(env, predicates, functions))
    return out


def brute_satisfiable_free(env: Environment, phi: Formula,
                           bound: Optional[Bound] = None):
    """An (interpretation, realization) satisfying phi, or None within bounds."""
    bound = bound or Bound()
    samples = bound.interpretation_samples or sample_interpretations(env)
    for interp in samples:
        for r in realizations(env, formula_variables(phi), bound.max_realization_len):
            if eval_formula(interp, r, phi):
                return interp, r
    return None
