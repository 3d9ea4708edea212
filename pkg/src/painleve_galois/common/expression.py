"""Text front end for rational functions in `z`.

Grammar, loosest binding first:

    expression := term (("+" | "-") term)*
    term       := unary (("*" | "/") unary)*
    unary      := "-" unary | power
    power      := atom ("^" integer)?
    atom       := number | "z" | "(" expression ")"

Binary operators associate to the left. Numbers are integers or exact decimals.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from functools import lru_cache
from typing import TYPE_CHECKING, Any

import pyparsing as pp
from sympy import Rational

from painleve_galois.common.exceptions import ExpressionSyntaxError
from painleve_galois.common.formatting import VARIABLE
from painleve_galois.common.rational_function import RationalFunction

if TYPE_CHECKING:
    from collections.abc import Callable


class ExpressionNode(ABC):
    """Node of a parsed expression."""

    @abstractmethod
    def evaluate(self: ExpressionNode) -> RationalFunction:
        """Reduce the subtree to a canonical rational function.

        Returns:
            RationalFunction: value of the subtree
        """


@dataclass(frozen=True)
class IntegerLiteral(ExpressionNode):
    """Nonnegative integer literal."""

    value: int

    def evaluate(self: IntegerLiteral) -> RationalFunction:  # noqa: D102
        return RationalFunction.constant(self.value)


@dataclass(frozen=True)
class RationalLiteral(ExpressionNode):
    """Exact decimal literal such as `0.25`."""

    value: Rational

    def evaluate(self: RationalLiteral) -> RationalFunction:  # noqa: D102
        return RationalFunction.constant(self.value)


@dataclass(frozen=True)
class Variable(ExpressionNode):
    """The variable `z`."""

    def evaluate(self: Variable) -> RationalFunction:  # noqa: D102
        return RationalFunction.identity()


@dataclass(frozen=True)
class Negation(ExpressionNode):
    """Unary minus."""

    operand: ExpressionNode

    def evaluate(self: Negation) -> RationalFunction:  # noqa: D102
        return -self.operand.evaluate()


@dataclass(frozen=True)
class Group(ExpressionNode):
    """Parenthesized subexpression."""

    inner: ExpressionNode

    def evaluate(self: Group) -> RationalFunction:  # noqa: D102
        return self.inner.evaluate()


@dataclass(frozen=True)
class Power(ExpressionNode):
    """Nonnegative integer power."""

    base: ExpressionNode
    exponent: int

    def evaluate(self: Power) -> RationalFunction:  # noqa: D102
        return self.base.evaluate() ** self.exponent


@dataclass(frozen=True)
class BinaryOperation(ExpressionNode):
    """Common shape of the four binary operators."""

    left: ExpressionNode
    right: ExpressionNode

    def evaluate(self: BinaryOperation) -> RationalFunction:  # noqa: D102
        return self.combine(self.left.evaluate(), self.right.evaluate())

    @staticmethod
    @abstractmethod
    def combine(left: RationalFunction, right: RationalFunction) -> RationalFunction:
        """Apply the operator.

        Args:
            left (RationalFunction): left operand
            right (RationalFunction): right operand

        Returns:
            RationalFunction: result
        """


@dataclass(frozen=True)
class Sum(BinaryOperation):
    """`left + right`."""

    @staticmethod
    def combine(left: RationalFunction, right: RationalFunction) -> RationalFunction:  # noqa: D102
        return left + right


@dataclass(frozen=True)
class Difference(BinaryOperation):
    """`left - right`."""

    @staticmethod
    def combine(left: RationalFunction, right: RationalFunction) -> RationalFunction:  # noqa: D102
        return left - right


@dataclass(frozen=True)
class Product(BinaryOperation):
    """`left * right`."""

    @staticmethod
    def combine(left: RationalFunction, right: RationalFunction) -> RationalFunction:  # noqa: D102
        return left * right


@dataclass(frozen=True)
class Quotient(BinaryOperation):
    """`left / right`; a zero right operand raises a DomainError on evaluation."""

    @staticmethod
    def combine(left: RationalFunction, right: RationalFunction) -> RationalFunction:  # noqa: D102
        return left / right


_BINARY: dict[str, type[BinaryOperation]] = {
    "+": Sum,
    "-": Difference,
    "*": Product,
    "/": Quotient,
}


def _number(tokens: pp.ParseResults) -> ExpressionNode:
    text = tokens[0]
    if "." in text:
        return RationalLiteral(Rational(text))
    return IntegerLiteral(int(text))


def _fold_left(tokens: pp.ParseResults) -> ExpressionNode:
    items: list[Any] = list(tokens)
    node = items[0]
    for index in range(1, len(items), 2):
        node = _BINARY[items[index]](node, items[index + 1])
    return node


def _power(tokens: pp.ParseResults) -> ExpressionNode:
    if len(tokens) == 1:
        return tokens[0]
    return Power(tokens[0], int(tokens[1]))


def _action(build: Callable[[pp.ParseResults], ExpressionNode]) -> Callable[..., Any]:
    def action(_text: str, _loc: int, tokens: pp.ParseResults) -> ExpressionNode:
        return build(tokens)

    return action


@lru_cache(maxsize=1)
def expression_grammar() -> pp.ParserElement:
    """Build the pyparsing grammar once.

    Returns:
        pp.ParserElement: grammar whose parse result is a single ExpressionNode
    """
    expression = pp.Forward()
    unary = pp.Forward()
    number = pp.Regex(r"\d+(?:\.\d+)?").set_name("number")
    number.set_parse_action(_action(_number))
    variable = pp.Keyword(VARIABLE).set_name(VARIABLE)
    variable.set_parse_action(_action(lambda _: Variable()))
    group = pp.Suppress("(") + expression + pp.Suppress(")")
    group.set_parse_action(_action(lambda t: Group(t[0])))
    atom = number | variable | group
    power = atom + pp.Optional(pp.Suppress("^") + pp.Regex(r"\d+").set_name("exponent"))
    power.set_parse_action(_action(_power))
    negation = pp.Suppress("-") + unary
    negation.set_parse_action(_action(lambda t: Negation(t[0])))
    unary <<= negation | power
    term = unary + pp.ZeroOrMore(pp.one_of("* /") + unary)
    term.set_parse_action(_action(_fold_left))
    expression <<= term + pp.ZeroOrMore(pp.one_of("+ -") + term)
    expression.set_parse_action(_action(_fold_left))
    return expression


def parse_expression(text: str) -> ExpressionNode:
    """Parse text into an expression tree.

    Args:
        text (str): expression such as `6/z^2 + z`

    Returns:
        ExpressionNode: root of the tree

    Raises:
        ExpressionSyntaxError: on lexical or syntax errors, with the 0-based position

    Examples:
        >>> parse_expression("-z^2")
        Negation(operand=Power(base=Variable(), exponent=2))
    """
    try:
        result = expression_grammar().parse_string(text, parse_all=True)
    except pp.ParseBaseException as exc:
        raise ExpressionSyntaxError(exc.msg, exc.loc) from exc
    return result[0]


def parse_rational_expression(text: str) -> RationalFunction:
    """Parse text into a canonical rational function.

    Args:
        text (str): expression in `z`

    Returns:
        RationalFunction: reduced value

    Examples:
        >>> print(parse_rational_expression("6/z^2 + z"))
        (z^3 + 6)/z^2
        >>> print(parse_rational_expression("0.5*z"))
        z/2
    """
    return parse_expression(text).evaluate()


def format_rational(f: RationalFunction) -> str:
    """Deterministic text form that `parse_rational_expression` reads back.

    Args:
        f (RationalFunction): function to render

    Returns:
        str: canonical text

    Examples:
        >>> format_rational(parse_rational_expression("-1/z"))
        '-1/z'
    """
    return str(f)
