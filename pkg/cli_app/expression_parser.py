"""
Element expressions: parse text into a tree, then evaluate it in a ring.

    expr    :: term (('+' | '-') term)*
    term    :: unary ('*' unary)*
    unary   :: '-' unary | power
    power   :: atom ('^' integer)*
    atom    :: rational | 'u(' rational ',' rational ',' rational ')'
             | generator | '[' expr ',' expr ']' | '(' expr ')'

Multiplication is always explicit; ``3/4`` is a single rational literal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Tuple

import pyparsing as pp

from ring_core import Element, RingDescriptor, RingKind, commutator, element_sum
from ring_core.errors import (
    ConstructorRingError,
    ElementParseError,
    GeneratorIndexError,
    UnknownGeneratorError,
)

pp.ParserElement.enable_packrat()


@dataclass(frozen=True)
class Node:
    """One node of the parse tree; ``loc`` is the byte offset of its first token."""

    kind: str
    args: Tuple[Any, ...]
    loc: int


def _byte_offset(s: str, loc: int) -> int:
    """pyparsing reports character positions; errors report UTF-8 byte offsets."""
    return len(s[:loc].encode("utf-8"))


def _rational(s: str, loc: int, toks: pp.ParseResults) -> Node:
    text = toks[0]
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise pp.ParseFatalException(s, loc, "zero denominator")
    return Node("num", (Fraction(int(num), int(den) if den else 1),), _byte_offset(s, loc))


def _generator(s: str, loc: int, toks: pp.ParseResults) -> Node:
    return Node("gen", (toks["prefix"], int(toks["index"])), _byte_offset(s, loc))


def _u2(s: str, loc: int, toks: pp.ParseResults) -> Node:
    return Node("u", tuple(t.args[0] for t in toks), _byte_offset(s, loc))


def _commutator(s: str, loc: int, toks: pp.ParseResults) -> Node:
    return Node("comm", (toks[0], toks[1]), _byte_offset(s, loc))


def _power(s: str, loc: int, toks: pp.ParseResults) -> Node:
    items = toks[0]
    node = items[0]
    for exponent in items[2::2]:
        node = Node("pow", (node, exponent), node.loc)
    return node


def _negate(s: str, loc: int, toks: pp.ParseResults) -> Node:
    items = toks[0]
    return Node("neg", (items[1],), _byte_offset(s, loc))


def _product(s: str, loc: int, toks: pp.ParseResults) -> Node:
    return Node("mul", tuple(toks[0][0::2]), _byte_offset(s, loc))


def _sum(s: str, loc: int, toks: pp.ParseResults) -> Node:
    items = toks[0]
    signed = [(1, items[0])] + [(1 if op == "+" else -1, t) for op, t in zip(items[1::2], items[2::2])]
    return Node("add", tuple(signed), _byte_offset(s, loc))


def _build_grammar() -> pp.ParserElement:
    expr = pp.Forward()
    rational = pp.Regex(r"\d+(/\d+)?").set_parse_action(_rational)
    signed_rational = pp.Regex(r"[+-]?\d+(/\d+)?").set_parse_action(_rational)
    lpar, rpar = pp.Suppress("("), pp.Suppress(")")
    comma = pp.Suppress(",")
    u2 = (
        pp.Suppress(pp.Regex(r"u(?=\()"))
        + lpar + signed_rational + comma + signed_rational + comma + signed_rational + rpar
    ).set_parse_action(_u2)
    generator = pp.Regex(r"(?P<prefix>[A-Za-z]+)(?P<index>\d+)").set_parse_action(_generator)
    bracket = (pp.Suppress("[") + expr + comma + expr + pp.Suppress("]")).set_parse_action(_commutator)
    atom = rational | u2 | generator | bracket | (lpar + expr + rpar)

    expr <<= pp.infix_notation(
        atom,
        [
            (pp.Literal("^"), 2, pp.OpAssoc.LEFT, _power),
            (pp.Literal("-"), 1, pp.OpAssoc.RIGHT, _negate),
            (pp.Literal("*"), 2, pp.OpAssoc.LEFT, _product),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT, _sum),
        ],
    )
    return expr.parse_with_tabs()


GRAMMAR = _build_grammar()


def parse_tree(src: str) -> Node:
    try:
        return GRAMMAR.parse_string(src, parse_all=True)[0]
    except pp.ParseBaseException as exc:
        raise ElementParseError(f"cannot parse {src!r}: {exc.msg}", _byte_offset(src, exc.loc)) from exc


def evaluate(node: Node, ring: RingDescriptor) -> Element:
    kind = node.kind
    if kind == "num":
        return Element.scalar(ring, node.args[0])
    if kind == "gen":
        prefix, index = node.args
        if not ring.has_generators or prefix != ring.generator_prefix:
            raise UnknownGeneratorError(f"unknown generator {prefix}{index} for {ring.label}", node.loc)
        if not 1 <= index <= ring.generator_count:
            raise GeneratorIndexError(
                f"{prefix}{index} outside {prefix}1..{prefix}{ring.generator_count}", node.loc
            )
        return Element.generator(ring, index)
    if kind == "u":
        if ring.kind is not RingKind.UPPER_TRIANGULAR_2:
            raise ConstructorRingError(f"u(p,q,r) is only valid in upper-triangular-2, not {ring.label}", node.loc)
        return Element.upper_triangular(ring, *node.args)
    if kind == "comm":
        return commutator(evaluate(node.args[0], ring), evaluate(node.args[1], ring))
    if kind == "pow":
        base, exponent = node.args
        if exponent.kind != "num" or exponent.args[0].denominator != 1:
            raise ElementParseError("exponent must be a non-negative integer", exponent.loc)
        return evaluate(base, ring) ** int(exponent.args[0])
    if kind == "neg":
        return -evaluate(node.args[0], ring)
    if kind == "mul":
        result = evaluate(node.args[0], ring)
        for factor in node.args[1:]:
            result = result * evaluate(factor, ring)
        return result
    if kind == "add":
        return element_sum(ring, (evaluate(t, ring) * sign for sign, t in node.args))
    raise ElementParseError(f"unexpected node {kind!r}", node.loc)


def parse_element(src: str, ring: RingDescriptor) -> Element:
    """Canonical Element for ``src`` in ``ring``."""
    return evaluate(parse_tree(src), ring)
