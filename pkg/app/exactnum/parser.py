"""
Recursive-descent parser shared by scalar literals and class expressions.

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := ('+' | '-') unary | power
    power := atom (('^' | '**') INT)?
    atom  := INT | 'g' | NAME '(' INT (',' INT)* ')' | '(' expr ')'

Function-call atoms are handed to a resolver so the same grammar serves plain
scalars and tautological class expressions.
"""
import re
from typing import Callable, List, NamedTuple, Optional, Sequence

from app.core.exceptions import ArithmeticDomainError, ExpressionSyntaxError, UsageError
from app.exactnum.ratfunc import RatFunc

TOKEN_PATTERN = re.compile(
    r"(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\*\*|[-+*/^(),])"
)

ATOM_START = ("integer", "g", "function name", "(", "+", "-")


class Token(NamedTuple):
    kind: str  # int | name | op | end
    text: str
    position: int


# resolver(name, args, name_position, arg_positions) -> value or None for unknown names
Resolver = Callable[[str, List[int], int, List[int]], object]


def tokenize(text: str) -> List[Token]:
    tokens = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(f"unexpected character {text[position]!r}", position, ATOM_START)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), position))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class ExpressionParser:
    def __init__(self, text: str, resolver: Optional[Resolver] = None):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0
        self.resolver = resolver

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _accept(self, *ops: str) -> Optional[Token]:
        token = self.current
        if token.kind == "op" and token.text in ops:
            return self._advance()
        return None

    def _expect_op(self, op: str, expected: Sequence[str]) -> Token:
        token = self._accept(op)
        if token is None:
            raise ExpressionSyntaxError(self._describe(self.current), self.current.position, expected)
        return token

    @staticmethod
    def _describe(token: Token) -> str:
        if token.kind == "end":
            return "unexpected end of input"
        return f"unexpected token {token.text!r}"

    def parse(self):
        if self.current.kind == "end":
            raise ExpressionSyntaxError("empty expression", 0, ATOM_START)
        value = self._expr()
        if self.current.kind != "end":
            raise ExpressionSyntaxError(
                self._describe(self.current), self.current.position,
                ("+", "-", "*", "/", "^", "end of input")
            )
        return value

    def _expr(self):
        value = self._term()
        while True:
            token = self._accept("+", "-")
            if token is None:
                return value
            right = self._term()
            value = value + right if token.text == "+" else value - right

    def _term(self):
        value = self._unary()
        while True:
            token = self._accept("*", "/")
            if token is None:
                return value
            right_position = self.current.position
            right = self._unary()
            if token.text == "*":
                value = value * right
                continue
            if not isinstance(right, RatFunc):
                raise UsageError(f"division by a non-scalar at position {right_position}")
            if right.is_zero():
                raise ArithmeticDomainError(f"division by zero at position {right_position}")
            value = value * right.inverse()

    def _unary(self):
        token = self._accept("+", "-")
        if token is None:
            return self._power()
        value = self._unary()
        return value if token.text == "+" else -value

    def _power(self):
        value = self._atom()
        if self._accept("^", "**") is None:
            return value
        token = self.current
        if token.kind != "int":
            raise ExpressionSyntaxError(self._describe(token), token.position, ("integer exponent",))
        self._advance()
        return value ** int(token.text)

    def _atom(self):
        token = self.current
        if token.kind == "int":
            self._advance()
            return RatFunc.from_int(int(token.text))
        if token.kind == "op" and token.text == "(":
            self._advance()
            value = self._expr()
            self._expect_op(")", (")", "+", "-", "*", "/", "^"))
            return value
        if token.kind == "name":
            self._advance()
            if token.text == "g":
                return RatFunc.genus()
            return self._call(token)
        raise ExpressionSyntaxError(self._describe(token), token.position, ATOM_START)

    def _call(self, name: Token):
        self._expect_op("(", ("(",))
        args, positions = [], []
        while True:
            token = self.current
            if token.kind != "int":
                raise ExpressionSyntaxError(self._describe(token), token.position, ("integer",))
            self._advance()
            args.append(int(token.text))
            positions.append(token.position)
            if self._accept(",") is not None:
                continue
            self._expect_op(")", (",", ")"))
            break
        value = self.resolver(name.text, args, name.position, positions) if self.resolver else None
        if value is None:
            raise ExpressionSyntaxError(f"unknown function {name.text!r}", name.position, ("g",))
        return value


def parse_scalar(text: str) -> RatFunc:
    """Parse a scalar in the integer / fraction / polynomial-in-g syntax"""
    value = ExpressionParser(text).parse()
    if not isinstance(value, RatFunc):
        raise UsageError(f"not a scalar: {text!r}")
    return value
