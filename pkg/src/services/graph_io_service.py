"""
图和着色文件的读写服务
支持 graph6 / DIMACS / edgelist 三种图格式，以及着色文件和颜色列表文件
"""
import os
import sys

from errors import MalformedInput, UnsupportedHeader, GraphTooLarge, BadSpec
from models import Edge, EdgeColoring, ColorLists, build_graph

GRAPH6 = 'graph6'
DIMACS = 'dimacs'
EDGELIST = 'edgelist'
FORMATS = (GRAPH6, DIMACS, EDGELIST)

GRAPH6_PREFIX = b'>>graph6<<'
GRAPH6_MAX_N = 68719476735
# 文本格式（DIMACS / edgelist）允许的最大顶点数
TEXT_MAX_N = 1_000_000

# 扩展名 -> 格式
EXTENSIONS = {
    '.g6': GRAPH6,
    '.graph6': GRAPH6,
    '.col': DIMACS,
    '.dimacs': DIMACS,
    '.edges': EDGELIST,
    '.edgelist': EDGELIST,
}


def _as_bytes(text):
    return text.encode('ascii') if isinstance(text, str) else bytes(text)


def _as_lines(text):
    try:
        return _as_bytes(text).decode('ascii').splitlines()
    except (UnicodeDecodeError, UnicodeEncodeError) as e:
        raise MalformedInput(e.start, "non-ascii input")


def _parse_int(token, lineno, what):
    try:
        value = int(token)
    except ValueError:
        raise MalformedInput(lineno, f"{what} is not an integer: {token!r}")
    if value < 0:
        raise MalformedInput(lineno, f"{what} is negative: {value}")
    return value


def _check_n(n):
    if n > TEXT_MAX_N:
        raise GraphTooLarge(n, TEXT_MAX_N)
    return n


def _check_pair(u, v, n, lineno):
    """端点检查放在解析阶段，错误带行号"""
    if u == v:
        raise MalformedInput(lineno, f"loop edge at vertex {u}")
    if n is not None and max(u, v) >= n:
        raise MalformedInput(lineno, f"vertex {max(u, v)} out of range for n={n}")


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------

def _encode_n(n):
    """graph6 的 N(n) 头部"""
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126]) + bytes(((n >> s) & 63) + 63 for s in (12, 6, 0))
    return bytes([126, 126]) + bytes(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))


def _serialize_graph6(g):
    if g.n > GRAPH6_MAX_N:
        raise GraphTooLarge(g.n, GRAPH6_MAX_N)

    out = bytearray(_encode_n(g.n))
    acc = 0
    nbits = 0
    # 上三角按列优先：x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, g.n):
        column = g.neighbors(j)
        for i in range(j):
            acc = (acc << 1) | (1 if i in column else 0)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _parse_graph6(data):
    text = _as_bytes(data).strip()
    if text.startswith(b'>>sparse6<<') or text.startswith(b'>>digraph6<<'):
        raise UnsupportedHeader(text[:12].decode('ascii', 'replace'))
    if text.startswith(GRAPH6_PREFIX):
        text = text[len(GRAPH6_PREFIX):]
    if not text:
        raise MalformedInput(0, "empty graph6 string")
    if text[0] in (ord(':'), ord('&')):
        raise UnsupportedHeader(chr(text[0]))

    for pos, b in enumerate(text):
        if not 63 <= b <= 126:
            raise MalformedInput(pos, f"byte {b} outside 63..126")

    # 解析 N(n)
    if text[0] == 126:
        if len(text) >= 2 and text[1] == 126:
            header, pos = text[2:8], 8
            width = 6
        else:
            header, pos = text[1:4], 4
            width = 3
        if len(header) < width:
            raise MalformedInput(len(text), "truncated size header")
        n = 0
        for b in header:
            n = (n << 6) | (b - 63)
    else:
        n, pos = text[0] - 63, 1

    total_bits = n * (n - 1) // 2
    expected = (total_bits + 5) // 6
    body = text[pos:]
    if len(body) != expected:
        raise MalformedInput(pos, f"expected {expected} data bytes, got {len(body)}")

    pairs = []
    bit_index = 0
    for j in range(1, n):
        for i in range(j):
            byte = body[bit_index // 6] - 63
            if (byte >> (5 - bit_index % 6)) & 1:
                pairs.append((i, j))
            bit_index += 1

    # 规范编码的补齐位必须为 0
    if total_bits % 6:
        pad = 6 - total_bits % 6
        if (body[-1] - 63) & ((1 << pad) - 1):
            raise MalformedInput(len(text) - 1, "non-zero padding bits")

    return build_graph(n, pairs)


# ---------------------------------------------------------------------------
# DIMACS
# ---------------------------------------------------------------------------

def _serialize_dimacs(g):
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {e.u + 1} {e.v + 1}" for e in g.sorted_edges())
    return ('\n'.join(lines) + '\n').encode('ascii')


def _parse_dimacs(data):
    n = None
    pairs = []
    for lineno, raw in enumerate(_as_lines(data), 1):
        line = raw.strip()
        if not line:
            continue
        tokens = line.split()
        tag = tokens[0]
        if tag == 'c':
            continue
        if tag == 'p':
            if n is not None:
                raise MalformedInput(lineno, "duplicate problem line")
            if len(tokens) != 4:
                raise MalformedInput(lineno, "problem line must be 'p edge N M'")
            if tokens[1] not in ('edge', 'col'):
                raise UnsupportedHeader(line)
            n = _check_n(_parse_int(tokens[2], lineno, "vertex count"))
            _parse_int(tokens[3], lineno, "edge count")
        elif tag == 'e':
            if n is None:
                raise MalformedInput(lineno, "edge line before problem line")
            if len(tokens) != 3:
                raise MalformedInput(lineno, "edge line must be 'e u v'")
            u = _parse_int(tokens[1], lineno, "vertex")
            v = _parse_int(tokens[2], lineno, "vertex")
            if u < 1 or v < 1:
                raise MalformedInput(lineno, "DIMACS vertices are 1-indexed")
            # 1-indexed -> 0-indexed
            _check_pair(u - 1, v - 1, n, lineno)
            pairs.append((u - 1, v - 1))
        else:
            raise MalformedInput(lineno, f"unknown line type {tag!r}")

    if n is None:
        raise MalformedInput(0, "missing problem line")
    return build_graph(n, pairs)


# ---------------------------------------------------------------------------
# edgelist
# ---------------------------------------------------------------------------

def _serialize_edgelist(g):
    # 总是写出 n 头部，孤立点才能在往返中保留
    lines = [f"n {g.n}"]
    lines.extend(f"{e.u} {e.v}" for e in g.sorted_edges())
    return ('\n'.join(lines) + '\n').encode('ascii')


def _parse_edgelist(data):
    declared_n = None
    seen_pair = False
    pairs = []
    for lineno, raw in enumerate(_as_lines(data), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == 'n':
            if seen_pair or declared_n is not None:
                raise MalformedInput(lineno, "'n N' header must precede all pairs")
            if len(tokens) != 2:
                raise MalformedInput(lineno, "header must be 'n N'")
            declared_n = _check_n(_parse_int(tokens[1], lineno, "vertex count"))
            continue
        if len(tokens) != 2:
            raise MalformedInput(lineno, "expected 'u v'")
        u = _parse_int(tokens[0], lineno, "vertex")
        v = _parse_int(tokens[1], lineno, "vertex")
        _check_pair(u, v, declared_n, lineno)
        pairs.append((u, v))
        seen_pair = True

    if declared_n is not None:
        n = declared_n
    else:
        n = _check_n(max((max(p) for p in pairs), default=-1) + 1)
    return build_graph(n, pairs)


# ---------------------------------------------------------------------------
# 公共接口
# ---------------------------------------------------------------------------

_PARSERS = {GRAPH6: _parse_graph6, DIMACS: _parse_dimacs, EDGELIST: _parse_edgelist}
_SERIALIZERS = {GRAPH6: _serialize_graph6, DIMACS: _serialize_dimacs, EDGELIST: _serialize_edgelist}


def parse_graph(text, fmt):
    """
    解析一个图

    Args:
        text: bytes 或 str
        fmt: 'graph6' / 'dimacs' / 'edgelist'

    Returns:
        Graph

    Raises:
        MalformedInput, UnsupportedHeader, BadSpec（未知格式）
        GraphTooLarge: 文本格式的顶点数超过 TEXT_MAX_N
    """
    try:
        parser = _PARSERS[fmt]
    except KeyError:
        raise BadSpec(f"unknown graph format {fmt!r}")
    return parser(text)


def serialize_graph(g, fmt):
    """
    序列化为规范编码（bytes）

    Raises:
        GraphTooLarge: graph6 且 n 超过格式上限
    """
    try:
        serializer = _SERIALIZERS[fmt]
    except KeyError:
        raise BadSpec(f"unknown graph format {fmt!r}")
    return serializer(g)


def detect_format(name, data):
    """
    判断图格式：先看扩展名，再看内容

    Args:
        name: 文件名（stdin 为 '-'）
        data: 文件内容

    Returns:
        str: 格式名
    """
    ext = os.path.splitext(name or '')[1].lower()
    if ext in EXTENSIONS:
        return EXTENSIONS[ext]

    for raw in _as_bytes(data).splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(GRAPH6_PREFIX):
            return GRAPH6
        if line[:2] in (b'p ', b'c ', b'e ') or line == b'c':
            return DIMACS
        if b' ' not in line and b'\t' not in line and all(63 <= b <= 126 for b in line):
            return GRAPH6
        return EDGELIST
    # 空输入按 edgelist 处理（得到 0 个顶点的图）
    return EDGELIST


# ---------------------------------------------------------------------------
# 着色文件 / 颜色列表文件
# ---------------------------------------------------------------------------

def serialize_coloring(coloring, header_lines=()):
    """
    着色文件：每行 "u v c"，可带 '#' 注释头

    Returns:
        str
    """
    lines = [f"# {h}" for h in header_lines]
    lines.extend(f"{e.u} {e.v} {c}" for e, c in coloring.sorted_items())
    return ''.join(line + '\n' for line in lines)


def parse_coloring(text):
    """
    解析着色文件

    Raises:
        MalformedInput: 行格式错误，或同一条边出现两个不同颜色
    """
    assignment = {}
    for lineno, raw in enumerate(_as_lines(text), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 3:
            raise MalformedInput(lineno, "expected 'u v c'")
        u, v, c = (_parse_int(t, lineno, name) for t, name in zip(tokens, ("vertex", "vertex", "color")))
        edge = Edge(u, v)
        if edge in assignment and assignment[edge] != c:
            raise MalformedInput(lineno, f"edge {edge} colored twice")
        assignment[edge] = c
    return EdgeColoring(assignment)


def parse_color_lists(text):
    """
    解析颜色列表文件：每行 "u v c1 c2 ..."
    """
    lists = {}
    for lineno, raw in enumerate(_as_lines(text), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) < 3:
            raise MalformedInput(lineno, "expected 'u v c1 [c2 ...]'")
        u = _parse_int(tokens[0], lineno, "vertex")
        v = _parse_int(tokens[1], lineno, "vertex")
        edge = Edge(u, v)
        if edge in lists:
            raise MalformedInput(lineno, f"duplicate list for edge {edge}")
        lists[edge] = frozenset(_parse_int(t, lineno, "color") for t in tokens[2:])
    return ColorLists.of(lists)


def serialize_color_lists(lists):
    lines = []
    for edge in sorted(lists.lists):
        colors = ' '.join(str(c) for c in sorted(lists.lists[edge]))
        lines.append(f"{edge.u} {edge.v} {colors}")
    return ''.join(line + '\n' for line in lines)


# ---------------------------------------------------------------------------
# 输入源
# ---------------------------------------------------------------------------

def read_source(source, stdin=None, fetcher=None):
    """
    读取输入源的原始字节

    Args:
        source: 文件路径、'-'（标准输入）或 http(s) URL
        stdin: 可选的二进制流，替代 sys.stdin.buffer
        fetcher: 可选的 GraphFetchService，用于 URL

    Returns:
        bytes
    """
    if source == '-':
        stream = stdin if stdin is not None else sys.stdin.buffer
        return stream.read()
    if source.startswith(('http://', 'https://')):
        if fetcher is None:
            from .fetch_service import GraphFetchService
            fetcher = GraphFetchService()
        return fetcher.fetch(source)
    try:
        with open(source, 'rb') as f:
            return f.read()
    except OSError as e:
        raise BadSpec(f"cannot read {source}: {e.strerror}")


def load_graph(source, fmt=None, stdin=None, fetcher=None):
    """
    读取并解析一个图（每个文件 / 流只含一个图）

    Args:
        source: 文件路径、'-' 或 URL
        fmt: 显式格式；None 表示自动判断

    Returns:
        Graph
    """
    data = read_source(source, stdin=stdin, fetcher=fetcher)
    name = source.split('?', 1)[0] if source != '-' else '-'
    return parse_graph(data, fmt or detect_format(name, data))
