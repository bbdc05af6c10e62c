"""Word-level identities satisfied by the four flexions.

Each law is a list of expressions in words a, b, c (and, for the
factorization laws, in a split of one of them) that must all evaluate to
the same word.  :func:`check_laws` runs every law over all triples of
words up to a given length, with fresh variables for every letter so that
equality is checked symbolically.
"""
from __future__ import annotations

import itertools

from .flexions import Word, flex
from .groups import Group

__all__ = ["LAWS", "SPLIT_LAWS", "words_up_to", "check_laws", "check_shuffle_coproduct"]


def ur(x, y):
    return flex("ur", x, y)


def ul(x, y):
    return flex("ul", x, y)


def lr(x, y):
    return flex("lr", x, y)


def ll(x, y):
    return flex("ll", x, y)


# Laws in three words.  The flag says whether b must be nonempty; under the
# empty-word conventions the composition laws fail for b = ().
LAWS = {
    "comm-ur-ur": (lambda a, b, c: [ur(a, ur(b, c)), ur(b, ur(a, c))], False),
    "comm-ul-ul": (lambda a, b, c: [ul(ul(c, a), b), ul(ul(c, b), a)], False),
    "comm-lr-lr": (lambda a, b, c: [lr(a, lr(b, c)), lr(b, lr(a, c))], False),
    "comm-ll-ll": (lambda a, b, c: [ll(ll(c, a), b), ll(ll(c, b), a)], False),
    "comm-ur-ul": (lambda a, b, c: [ur(a, ul(c, b)), ul(ur(a, c), b)], False),
    "comm-ur-lr": (lambda a, b, c: [ur(a, lr(b, c)), lr(b, ur(a, c))], False),
    "comm-ur-ll": (lambda a, b, c: [ur(a, ll(c, b)), ll(ur(a, c), b)], False),
    "comm-ul-lr": (lambda a, b, c: [ul(lr(b, c), a), lr(b, ul(c, a))], False),
    "comm-ul-ll": (lambda a, b, c: [ul(ll(c, b), a), ll(ul(c, a), b)], False),
    "comm-lr-ll": (lambda a, b, c: [lr(a, ll(c, b)), ll(lr(a, c), b)], False),
    "comp-ur": (lambda a, b, c: [ur(ul(b, a), c), ur(ur(a, b), c), ur(a + b, c)], True),
    "comp-lr": (lambda a, b, c: [lr(ll(b, a), ll(c, a)), lr(lr(a, b), lr(a, c)), lr(b, c)], True),
    "comp-ul": (lambda a, b, c: [ul(c, ul(b, a)), ul(c, ur(a, b)), ul(c, a + b)], True),
    "comp-ll": (lambda a, b, c: [ll(ll(c, a), ll(b, a)), ll(lr(a, c), lr(a, b)), ll(c, b)], True),
    "indep-ur": (lambda a, b, c: [ur(ll(b, a), c), ur(lr(a, b), c), ur(b, c)], False),
    "indep-lr": (lambda a, b, c: [lr(ul(b, a), c), lr(ur(a, b), c), lr(b, c)], False),
    "indep-ul": (lambda a, b, c: [ul(c, ll(b, a)), ul(c, lr(a, b)), ul(c, b)], False),
    "indep-ll": (lambda a, b, c: [ll(c, ul(b, a)), ll(c, ur(a, b)), ll(c, b)], False),
}

# Laws where one word is split as x1 x2.  Arguments: (x1, x2, y).  The flag
# says whether x1 must be nonempty (first element) or x2 must be (second).
SPLIT_LAWS = {
    "ur-concat": (lambda a1, a2, b: [ur(a1 + a2, b), ur(a1, ur(a2, b))], (False, False)),
    "ul-concat": (lambda a1, a2, b: [ul(b, a1 + a2), ul(ul(b, a1), a2)], (False, False)),
    "lr-split": (lambda b1, b2, a: [lr(a, b1 + b2), lr(a, b1) + lr(a, b2)], (False, False)),
    "ll-split": (lambda b1, b2, a: [ll(b1 + b2, a), ll(b1, a) + ll(b2, a)], (False, False)),
    "ur-head": (lambda b1, b2, a: [ur(a, b1 + b2), ur(a, b1) + b2], (True, False)),
    "ul-tail": (lambda b1, b2, a: [ul(b2 + b1, a), b2 + ul(b1, a)], (True, False)),
    "lr-last": (lambda a1, a2, b: [lr(a1 + a2, b), lr(a2, b)], (False, True)),
    "ll-first": (lambda a1, a2, b: [ll(b, a2 + a1), ll(b, a2)], (False, True)),
}


def words_up_to(group: Group, max_len: int):
    """Group-label patterns of lengths 0..max_len."""
    for n in range(max_len + 1):
        yield from itertools.product(range(group.order), repeat=n)


def _words(group, side, patterns):
    """Turn label patterns into words with one fresh variable per letter."""
    n = sum(len(p) for p in patterns)
    out, k = [], 0
    for p in patterns:
        letters = []
        for s in p:
            form = [0] * n
            form[k] = 1
            k += 1
            letters.append((tuple(form), s))
        out.append(Word(group, side, letters))
    return out


def check_laws(group: Group, side: str = "u", max_len: int = 3):
    """Run every law; return (number of instances, list of failures)."""
    pats = list(words_up_to(group, max_len))
    count, failures = 0, []
    for p in itertools.product(pats, repeat=3):
        a, b, c = _words(group, side, p)
        for name, (law, need_b) in LAWS.items():
            if need_b and not len(b):
                continue
            vals = law(a, b, c)
            count += 1
            if any(v != vals[0] for v in vals[1:]):
                failures.append((name, p))
        x1, x2, y = a, b, c
        for name, (law, (need1, need2)) in SPLIT_LAWS.items():
            if (need1 and not len(x1)) or (need2 and not len(x2)):
                continue
            vals = law(x1, x2, y)
            count += 1
            if any(v != vals[0] for v in vals[1:]):
                failures.append((name, p))
    return count, failures


def _deconcatenations(w, r):
    if r == 1:
        yield (w,)
        return
    for i in range(len(w) + 1):
        for rest in _deconcatenations(w[i:], r - 1):
            yield (w[:i],) + rest


def _split_product(ws, es):
    """Expansion of the product of the shuffles wi sha ei, keyed by the tuple
    of result words."""
    from .symmetries import shuffle_product
    acc = {(): 1}
    for wi, ei in zip(ws, es):
        sh = shuffle_product(wi, ei)
        acc = {k + (a,): c * n for k, c in acc.items() for a, n in sh.items()}
    return acc


def check_shuffle_coproduct(alphabet=(0, 1), max_len: int = 3, r_max: int = 3):
    """Sh(w; e; a1...ar) = sum over splittings w = w1..wr, e = e1..er of the
    product of Sh(wi; ei; ai), for all short words over ``alphabet``.

    Checked for every target word and every splitting of it into r parts.
    """
    from .symmetries import shuffle_product
    words = [w for n in range(max_len + 1) for w in itertools.product(alphabet, repeat=n)]
    count, failures = 0, []
    for w, e in itertools.product(words, repeat=2):
        lhs = shuffle_product(w, e)
        targets = list(itertools.product(alphabet, repeat=len(w) + len(e)))
        for r in range(2, r_max + 1):
            rhs = {}
            for ws in _deconcatenations(w, r):
                for es in _deconcatenations(e, r):
                    for parts, c in _split_product(ws, es).items():
                        rhs[parts] = rhs.get(parts, 0) + c
            for t in targets:
                for parts in _deconcatenations(t, r):
                    count += 1
                    if lhs.get(t, 0) != rhs.get(parts, 0):
                        failures.append((w, e, parts))
    return count, failures
