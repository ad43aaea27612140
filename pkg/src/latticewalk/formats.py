"""Plain-text file formats.

matrix:       line 1 "d n", then d rows of n integers
vector list:  line 1 "n", then one vector of n integers per line
IP instance:  line 1 "n", line 2 the constraint row a, line 3 b,
              optional line 4 the cost vector c

Tokens are whitespace separated; blank lines are ignored; anything beyond
the declared content is an error.
"""

from .errors import ParseError


def _lines(text):
    """Non-blank lines as lists of (token, line, column)."""
    out = []
    for ln, line in enumerate(text.splitlines(), start=1):
        toks = []
        col = 0
        for part in line.split():
            col = line.index(part, col)
            toks.append((part, ln, col + 1))
            col += len(part)
        if toks:
            out.append(toks)
    return out


def _int(tok):
    s, ln, col = tok
    try:
        return int(s)
    except ValueError:
        raise ParseError(f"expected an integer, found {s!r}", ln, col) from None


def _row(toks, width, what):
    if len(toks) != width:
        _, ln, col = toks[width] if len(toks) > width else toks[-1]
        raise ParseError(f"{what}: expected {width} entries, found {len(toks)}", ln, col)
    return tuple(_int(t) for t in toks)


def _header(lines, count, what):
    if not lines:
        raise ParseError(f"empty {what} file")
    head = lines[0]
    if len(head) != count:
        _, ln, col = head[count] if len(head) > count else head[-1]
        raise ParseError(f"{what} header must have {count} integer(s)", ln, col)
    vals = [_int(t) for t in head]
    if any(v < 0 for v in vals):
        raise ParseError(f"{what} header must be nonnegative", head[0][1], head[0][2])
    return vals


def parse_matrix(text):
    lines = _lines(text)
    d, n = _header(lines, 2, "matrix")
    body = lines[1:]
    if len(body) < d:
        raise ParseError(f"matrix: expected {d} rows, found {len(body)}")
    if len(body) > d:
        t = body[d][0]
        raise ParseError("trailing data after matrix", t[1], t[2])
    return tuple(_row(r, n, "matrix row") for r in body)


def parse_vectors(text):
    lines = _lines(text)
    (n,) = _header(lines, 1, "vector list")
    return n, [_row(r, n, "vector") for r in lines[1:]]


def sniff(text):
    """'matrix' or 'vectors', from the number of integers on the first line."""
    lines = _lines(text)
    if not lines:
        raise ParseError("empty input")
    if len(lines[0]) == 2:
        return "matrix"
    if len(lines[0]) == 1:
        return "vectors"
    t = lines[0][0]
    raise ParseError("header must be 'd n' (matrix) or 'n' (vector list)", t[1], t[2])


def parse_instance(text):
    """Returns (a, b, c) with c None when the cost line is absent."""
    lines = _lines(text)
    (n,) = _header(lines, 1, "instance")
    if len(lines) < 3:
        raise ParseError("instance needs a constraint row and a right-hand side")
    a = _row(lines[1], n, "constraint row")
    b = _row(lines[2], 1, "right-hand side")[0]
    c = None
    if len(lines) >= 4:
        c = _row(lines[3], n, "cost vector")
    if len(lines) > 4:
        t = lines[4][0]
        raise ParseError("trailing data after instance", t[1], t[2])
    return a, b, c


def format_matrix(M, n=None):
    n = n if n is not None else (len(M[0]) if M else 0)
    out = [f"{len(M)} {n}"]
    out += [" ".join(str(x) for x in row) for row in M]
    return "\n".join(out) + "\n"


def format_vectors(vectors, n):
    out = [str(n)]
    out += [" ".join(str(x) for x in v) for v in vectors]
    return "\n".join(out) + "\n"


def format_instance(a, b, c=None):
    out = [str(len(a)), " ".join(map(str, a)), str(b)]
    if c is not None:
        out.append(" ".join(map(str, c)))
    return "\n".join(out) + "\n"


def parse_int_list(s, what="vector"):
    try:
        return tuple(int(x) for x in s.split())
    except ValueError:
        raise ParseError(f"{what}: expected integers, got {s!r}") from None
