"""
异常定义
所有异常都继承自 ValueError，并带有 CLI 使用的退出码

退出码约定：
  2 - 用法错误 / 输入格式错误
  3 - 前置条件不满足
  4 - 超时（结果未知）
"""


class StrongEdgeError(ValueError):
    """工具包所有异常的基类"""

    exit_code = 3

    def __init__(self, message=""):
        super().__init__(message)
        self.message = message

    @property
    def name(self):
        return type(self).__name__

    def machine_line(self):
        """
        生成一行可被机器解析的错误描述

        Returns:
            str: 形如 "error: LoopEdge: u=0"
        """
        return f"error: {self.name}: {self.message}" if self.message else f"error: {self.name}"


# ---------------------------------------------------------------------------
# 输入 / 格式错误（退出码 2）
# ---------------------------------------------------------------------------

class MalformedInput(StrongEdgeError):
    exit_code = 2

    def __init__(self, position, reason):
        super().__init__(f"position={position} reason={reason}")
        self.position = position
        self.reason = reason


class UnsupportedHeader(StrongEdgeError):
    exit_code = 2

    def __init__(self, header):
        super().__init__(f"header={header!r}")
        self.header = header


class GraphTooLarge(StrongEdgeError):
    exit_code = 2

    def __init__(self, n, limit):
        super().__init__(f"n={n} limit={limit}")
        self.n = n
        self.limit = limit


class BadSpec(StrongEdgeError):
    exit_code = 2

    def __init__(self, reason):
        super().__init__(f"reason={reason}")
        self.reason = reason


class FetchFailed(StrongEdgeError):
    exit_code = 2

    def __init__(self, url, reason):
        super().__init__(f"url={url} reason={reason}")
        self.url = url
        self.reason = reason


# ---------------------------------------------------------------------------
# 图结构错误（退出码 3）
# ---------------------------------------------------------------------------

class LoopEdge(StrongEdgeError):
    def __init__(self, u):
        super().__init__(f"u={u}")
        self.u = u


class VertexOutOfRange(StrongEdgeError):
    def __init__(self, v, n):
        super().__init__(f"v={v} n={n}")
        self.v = v
        self.n = n


class EdgeNotInGraph(StrongEdgeError):
    def __init__(self, edge):
        super().__init__(f"edge={edge}")
        self.edge = edge


class UnknownEdge(StrongEdgeError):
    def __init__(self, edge):
        super().__init__(f"edge={edge}")
        self.edge = edge


# ---------------------------------------------------------------------------
# 算法前置条件（退出码 3）
# ---------------------------------------------------------------------------

class NoEdges(StrongEdgeError):
    def __init__(self):
        super().__init__("graph has no edges")


class NoNiceVertex(StrongEdgeError):
    def __init__(self, reason="no vertex satisfies the nice-vertex condition"):
        super().__init__(reason)


class PreconditionViolated(StrongEdgeError):
    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class KExceedsDelta(StrongEdgeError):
    def __init__(self, k, delta):
        super().__init__(f"k={k} delta={delta}")
        self.k = k
        self.delta = delta


class PaletteExhausted(StrongEdgeError):
    def __init__(self, edge):
        super().__init__(f"edge={edge}")
        self.edge = edge


class ListTooSmall(StrongEdgeError):
    def __init__(self, edge, needed, actual):
        super().__init__(f"edge={edge} needed={needed} actual={actual}")
        self.edge = edge
        self.needed = needed
        self.actual = actual


class TooLarge(StrongEdgeError):
    def __init__(self, edges, max_edges):
        super().__init__(f"edges={edges} max_edges={max_edges}")
        self.edges = edges
        self.max_edges = max_edges


class InvariantViolation(StrongEdgeError):
    """内部不变量被破坏（说明实现有 bug）"""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


# ---------------------------------------------------------------------------
# 超时（退出码 4）
# ---------------------------------------------------------------------------

class TimeBudgetExceeded(StrongEdgeError):
    exit_code = 4

    def __init__(self, seconds):
        super().__init__(f"budget={seconds}s result=unknown")
        self.seconds = seconds
