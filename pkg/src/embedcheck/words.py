"""Freely reduced words in a free group, plus the word-expression parser.

A word is a tuple of (generator index, nonzero exponent) syllables in
which adjacent syllables never share a generator; the empty tuple is the
identity.  The text grammar accepts juxtaposition or ``*`` for products,
``^`` with an integer for powers, ``[u,v]`` for the commutator
u v u^-1 v^-1, parentheses for grouping, and ``1`` for the identity.
"""

import re


class WordSyntaxError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class Word:
    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = _reduce(letters)

    @property
    def is_identity(self):
        return not self.letters

    def __mul__(self, other):
        return Word(self.letters + other.letters)

    def inverse(self):
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n):
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        return Word(base.letters * abs(n))

    def conjugate(self, by):
        """by * self * by^-1"""
        return by * self * by.inverse()

    def exponent_sums(self, ngens):
        sums = [0] * ngens
        for g, e in self.letters:
            sums[g] += e
        return sums

    def max_generator(self):
        return max((g for g, _ in self.letters), default=-1)

    def shift_generators(self, offset):
        return Word(tuple((g + offset, e) for g, e in self.letters))

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __len__(self):
        return sum(abs(e) for _, e in self.letters)

    def to_text(self, names):
        if not self.letters:
            return "1"
        return "*".join(
            names[g] if e == 1 else f"{names[g]}^{e}" for g, e in self.letters
        )

    def __repr__(self):
        return f"Word({self.letters!r})"


def _reduce(letters):
    out = []
    for g, e in letters:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            e2 = out[-1][1] + e
            out.pop()
            if e2:
                out.append((g, e2))
        else:
            out.append((g, int(e)))
    return tuple(out)


def commutator(u, v):
    return u * v * u.inverse() * v.inverse()


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z_0-9]*)|(-?\d+)|([*^()\[\],]))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
                raise WordSyntaxError(f"unexpected character {text[bad]!r}", bad)
            break
        ident, number, sym = m.groups()
        if ident is not None:
            tokens.append(("ident", ident, m.start(1)))
        elif number is not None:
            tokens.append(("int", int(number), m.start(2)))
        else:
            tokens.append(("sym", sym, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, names):
        self.tokens = _tokenize(text)
        self.i = 0
        self.names = list(names)
        self.index = {n: i for i, n in enumerate(self.names)}

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_sym(self, sym):
        kind, value, pos = self.advance()
        if kind != "sym" or value != sym:
            raise WordSyntaxError(f"expected {sym!r}", pos)

    def parse(self):
        word = self.product()
        kind, _, pos = self.peek()
        if kind != "end":
            raise WordSyntaxError("trailing input", pos)
        return word

    def product(self):
        word = self.power()
        while True:
            kind, value, _ = self.peek()
            if kind == "sym" and value == "*":
                self.advance()
                word = word * self.power()
            elif kind in ("ident", "int") or (kind == "sym" and value in "(["):
                word = word * self.power()
            else:
                return word

    def power(self):
        word = self.atom()
        kind, value, _ = self.peek()
        if kind == "sym" and value == "^":
            self.advance()
            kind, value, pos = self.advance()
            if kind != "int":
                raise WordSyntaxError("expected integer exponent", pos)
            word = word ** value
        return word

    def atom(self):
        kind, value, pos = self.advance()
        if kind == "ident":
            return self.generator(value, pos)
        if kind == "int":
            if value == 1:
                return Word()
            raise WordSyntaxError(f"unexpected number {value}", pos)
        if kind == "sym" and value == "(":
            word = self.product()
            self.expect_sym(")")
            return word
        if kind == "sym" and value == "[":
            u = self.product()
            self.expect_sym(",")
            v = self.product()
            self.expect_sym("]")
            return commutator(u, v)
        raise WordSyntaxError("expected a generator, '(' or '['", pos)

    def generator(self, name, pos):
        if name in self.index:
            return Word(((self.index[name], 1),))
        # allow juxtaposed single names inside one identifier, longest first
        parts = []
        rest = name
        while rest:
            for cand in sorted(self.index, key=len, reverse=True):
                if rest.startswith(cand):
                    parts.append(self.index[cand])
                    rest = rest[len(cand):]
                    break
            else:
                raise WordSyntaxError(f"unknown generator {name!r}", pos)
        return Word(tuple((g, 1) for g in parts))


def parse_word(text, generator_names):
    """Parse a word expression against the given generator names; returns
    the freely reduced Word.  Raises WordSyntaxError with a position for
    malformed input or unknown generators."""
    return _Parser(text, generator_names).parse()
