"""Independent reference computations used to derive expected test values.

Nothing here imports the package: functors are plain dicts from edge
names to letter lists, composed by substitution and stack cancellation.
"""

from math import gcd


def reduce_letters(letters):
    out = []
    for x in letters:
        if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
            out.pop()
        else:
            out.append(x)
    return out


def substitute(images, letters):
    """Apply an edge -> letters map to a word; unlisted edges are fixed."""
    out = []
    for lab, s in letters:
        img = images.get(lab, [(lab, 1)])
        if s == -1:
            img = [(x, -t) for x, t in reversed(img)]
        out.extend(img)
    return reduce_letters(out)


def lift(n, d, i, sign=1):
    """Edge images of the lifted twist written straight from its formulas."""
    def E(a, j):
        return f"e[{a}][{(j - 1) % d + 1}]"

    images = {}
    for j in range(1, d + 1):
        if sign == 1:
            images[E(i - 1, j)] = [(E(i - 1, j), 1), (E(i, j + 1), 1)]
            images[E(i, j)] = [(E(i, j + 1), -1)]
            images[E(i + 1, j)] = [(E(i, j), 1), (E(i + 1, j), 1)]
        else:
            images[E(i - 1, j)] = [(E(i - 1, j), 1), (E(i, j), 1)]
            images[E(i, j)] = [(E(i, j - 1), -1)]
            images[E(i + 1, j)] = [(E(i, j - 1), 1), (E(i + 1, j), 1)]
    return images


def all_edges(n, d):
    return [f"e[{i}][{j}]" for i in range(n + 1) for j in range(1, d + 1)]


def evaluate(n, d, word):
    """Edge images of a signed-integer braid word, leftmost letter applied first."""
    images = {x: [(x, 1)] for x in all_edges(n, d)}
    for g in word:
        step = lift(n, d, abs(g), 1 if g > 0 else -1)
        images = {x: substitute(step, w) for x, w in images.items()}
    return images


def show(letters):
    return "·".join(lab if s == 1 else f"{lab}^-1" for lab, s in letters)


def rh_from_euler(d, n):
    """(g, b) of the cyclic cover of the disk from χ = d·χ(disk) - (d-1)·n and b = gcd(d, n)."""
    chi = d - (d - 1) * n
    b = gcd(d, n)
    return (2 - chi - b) // 2, b
