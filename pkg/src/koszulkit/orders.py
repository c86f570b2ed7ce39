"""Monomial orders on exponent tuples.

Every order is exposed through a sort key: ``m1 < m2`` in the order iff
``order.key(m1) < order.key(m2)`` as Python tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

BASIC_KINDS = ("lex", "grlex", "grevlex")


def _basic_key(kind: str, idx: tuple[int, ...]):
    if kind == "lex":
        return lambda e: tuple(e[i] for i in idx)
    if kind == "grlex":
        return lambda e: (sum(e[i] for i in idx),) + tuple(e[i] for i in idx)
    if kind == "grevlex":
        rev = idx[::-1]
        return lambda e: (sum(e[i] for i in idx),) + tuple(-e[i] for i in rev)
    raise ValueError(f"unknown order kind {kind!r}")


@dataclass(frozen=True)
class MonomialOrder:
    """``kind`` is lex, grlex, grevlex or block.

    ``blocks`` lists ``(sub_kind, variable_indices)``; block orders compare
    block by block in the listed sequence.  A basic order may also carry a
    single block to act on a permuted variable sequence.
    """

    kind: str
    nvars: int
    blocks: tuple = ()
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if self.kind in BASIC_KINDS:
            blocks = self.blocks or ((self.kind, tuple(range(self.nvars))),)
            if len(blocks) != 1:
                raise ValueError("basic orders take at most one block")
        elif self.kind == "block":
            blocks = self.blocks
            if not blocks:
                raise ValueError("block order needs blocks")
        else:
            raise ValueError(f"unknown order kind {self.kind!r}")
        seen = sorted(i for _, idx in blocks for i in idx)
        if seen != list(range(self.nvars)):
            raise ValueError("order blocks must partition the variables")
        blocks = tuple((k, tuple(idx)) for k, idx in blocks)
        object.__setattr__(self, "blocks", blocks)
        parts = [_basic_key(k, idx) for k, idx in blocks]
        if len(parts) == 1:
            raw = parts[0]
        else:
            def raw(e, parts=parts):
                out = ()
                for p in parts:
                    out += p(e)
                return out
        object.__setattr__(self, "_raw", raw)

    def key(self, exp: tuple) -> tuple:
        c = self._cache
        k = c.get(exp)
        if k is None:
            k = self._raw(exp)
            if len(c) < 500_000:
                c[exp] = k
        return k

    def neg_key(self, exp: tuple) -> tuple:
        """Negated key, so a min-heap pops the largest monomial first."""
        c = self._cache
        nk = c.get((None, exp))
        if nk is None:
            nk = tuple(-v for v in self.key(exp))
            if len(c) < 500_000:
                c[(None, exp)] = nk
        return nk

    def __getstate__(self):
        return {"kind": self.kind, "nvars": self.nvars, "blocks": self.blocks}

    def __setstate__(self, state):
        object.__setattr__(self, "_cache", {})
        for k, v in state.items():
            object.__setattr__(self, k, v)
        self.__post_init__()

    def describe(self, names=None) -> str:
        names = names or [f"x{i}" for i in range(self.nvars)]
        if self.kind in BASIC_KINDS and self.blocks[0][1] == tuple(range(self.nvars)):
            return self.kind
        inner = ", ".join(f"{k}[{','.join(names[i] for i in idx)}]" for k, idx in self.blocks)
        return f"block({inner})"


def lex(n: int) -> MonomialOrder:
    return MonomialOrder("lex", n)


def grlex(n: int) -> MonomialOrder:
    return MonomialOrder("grlex", n)


def grevlex(n: int) -> MonomialOrder:
    return MonomialOrder("grevlex", n)


def block(n: int, *blocks) -> MonomialOrder:
    """``block(4, ("grlex", [0, 3]), ("grevlex", [1, 2]))``."""
    return MonomialOrder("block", n, tuple((k, tuple(idx)) for k, idx in blocks))


def permuted(kind: str, perm) -> MonomialOrder:
    """Basic order acting on the variables in the sequence ``perm`` (first is largest)."""
    perm = tuple(perm)
    return MonomialOrder("block", len(perm), ((kind, perm),))


def make_order(kind: str, n: int) -> MonomialOrder:
    return MonomialOrder(kind, n)


def parse_order(text: str, names) -> MonomialOrder:
    """Parse ``lex``, ``grevlex``, ``block(grlex[a,b], grevlex[c,d])`` or ``block:...``."""
    names = list(names)
    n = len(names)
    t = text.strip()
    if t in BASIC_KINDS:
        return MonomialOrder(t, n)
    if t.startswith("block:"):
        body = t[len("block:"):]
    elif t.startswith("block(") and t.endswith(")"):
        body = t[len("block("):-1]
    else:
        raise ValueError(f"bad order {text!r}")
    blocks = []
    rest = body.replace(";", ",")
    pos = 0
    while pos < len(rest):
        while pos < len(rest) and rest[pos] in ", ":
            pos += 1
        if pos >= len(rest):
            break
        lb = rest.find("[", pos)
        rb = rest.find("]", lb)
        if lb < 0 or rb < 0:
            raise ValueError(f"bad block order {text!r}")
        kind = rest[pos:lb].strip()
        if kind not in BASIC_KINDS:
            raise ValueError(f"bad block sub-order {kind!r}")
        vs = [v.strip() for v in rest[lb + 1:rb].split(",") if v.strip()]
        try:
            idx = tuple(names.index(v) for v in vs)
        except ValueError:
            raise ValueError(f"unknown variable in order {text!r}") from None
        blocks.append((kind, idx))
        pos = rb + 1
    return MonomialOrder("block", n, tuple(blocks))


def standard_orders(n: int) -> list[MonomialOrder]:
    """Eight fixed orders: lex/grlex/grevlex forwards and reversed, plus two block orders."""
    fwd = tuple(range(n))
    rev = fwd[::-1]
    h = n // 2
    out = [MonomialOrder(k, n) for k in BASIC_KINDS]
    out += [permuted(k, rev) for k in BASIC_KINDS]
    out.append(MonomialOrder("block", n, (("grevlex", fwd[:h]), ("grevlex", fwd[h:]))))
    out.append(MonomialOrder("block", n, (("grlex", rev[:h]), ("lex", rev[h:]))))
    return out
