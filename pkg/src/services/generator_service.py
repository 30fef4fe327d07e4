"""
图族生成服务
文献中的具名图族（C5 blow-up、Cn 加悬挂边等）和性质测试用的随机图
"""
from errors import BadSpec, InvariantViolation
from models import GenSpec, KIND_PARAMS, build_graph
from utils import SplitMix64
from .analysis_service import degeneracy, is_three_plus_forest

# random_three_plus_forest 的重试次数上限
MAX_ATTEMPTS = 100

# 各参数的最小值
_MINIMUMS = {
    'cycle': {'n': 3},
    'corona_cycle': {'n': 3},
    'c5_blowup': {'t': 1},
    'double_star': {'a': 1, 'b': 1},
    'theta': {'a': 2, 'b': 2, 'c': 2},
    'path': {'n': 1},
    'star': {'n': 1},
    'complete': {'n': 1},
    'random_k_degenerate': {'n': 1, 'k': 1},
    'random_three_plus_forest': {'n': 2},
}


def parse_gen_spec(text, default_seed=0):
    """
    解析命令行里的生成规格

    支持位置参数和 key=value 两种写法，可以混用：
        "cycle:5", "double_star:2,3", "theta:a=2,b=3,c=4",
        "random_k_degenerate:n=30,k=2,seed=7"

    Args:
        text: 规格字符串
        default_seed: 未写 seed 时使用的值

    Returns:
        GenSpec

    Raises:
        BadSpec
    """
    kind, _, arg_text = text.strip().partition(':')
    kind = kind.strip().lower()
    if kind not in KIND_PARAMS:
        raise BadSpec(f"unknown family {kind!r}")

    names = KIND_PARAMS[kind]
    params = {}
    seed = default_seed
    positional = 0
    for token in filter(None, (t.strip() for t in arg_text.split(','))):
        key, sep, value = token.partition('=')
        if not sep:
            if positional >= len(names):
                raise BadSpec(f"too many arguments for {kind}")
            key, value = names[positional], token
            positional += 1
        key = key.strip()
        try:
            number = int(value.strip(), 0)
        except ValueError:
            raise BadSpec(f"{key} is not an integer: {value!r}")
        if key == 'seed':
            seed = number
        elif key in names:
            params[key] = number
        else:
            raise BadSpec(f"unknown parameter {key!r} for {kind}")

    spec = GenSpec(kind=kind, params=params, seed=seed)
    validate_spec(spec)
    return spec


def validate_spec(spec):
    """检查参数齐全且满足最小值"""
    if spec.kind not in KIND_PARAMS:
        raise BadSpec(f"unknown family {spec.kind!r}")
    for name in KIND_PARAMS[spec.kind]:
        if name not in spec.params:
            raise BadSpec(f"{spec.kind} requires parameter {name}")
        minimum = _MINIMUMS[spec.kind][name]
        if spec.params[name] < minimum:
            raise BadSpec(f"{spec.kind}: {name} must be >= {minimum}, got {spec.params[name]}")


# ---------------------------------------------------------------------------
# 各图族
# ---------------------------------------------------------------------------

def _cycle(n):
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def _corona_cycle(n):
    # 圈上顶点 0..n-1，顶点 i 的悬挂点为 n+i
    pairs = [(i, (i + 1) % n) for i in range(n)]
    pairs += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, pairs)


def _c5_blowup(t):
    # 第 p 部分占 [p*t, (p+1)*t)，相邻部分完全连接
    pairs = []
    for p in range(5):
        q = (p + 1) % 5
        for i in range(t):
            for j in range(t):
                pairs.append((p * t + i, q * t + j))
    return build_graph(5 * t, pairs)


def _double_star(a, b):
    # 中心 0 和 1 相邻；0 上挂 a 个叶子，1 上挂 b 个
    pairs = [(0, 1)]
    pairs += [(0, 2 + i) for i in range(a)]
    pairs += [(1, 2 + a + i) for i in range(b)]
    return build_graph(a + b + 2, pairs)


def _theta(a, b, c):
    # 两个枢纽 0、1 之间三条内部不交的路，内部顶点依次编号
    pairs = []
    next_id = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            pairs.append((prev, next_id))
            prev = next_id
            next_id += 1
        pairs.append((prev, 1))
    return build_graph(next_id, pairs)


def _path(n):
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def _star(n):
    return build_graph(n + 1, [(0, i) for i in range(1, n + 1)])


def _complete(n):
    return build_graph(n, [(i, j) for j in range(n) for i in range(j)])


def _random_k_degenerate(n, k, seed):
    """逐个加点，每个新点连向 min(k, 现有点数) 个均匀选取的已有点"""
    rng = SplitMix64(seed)
    pairs = []
    for v in range(1, n):
        for u in rng.sample(range(v), min(k, v)):
            pairs.append((u, v))
    g = build_graph(n, pairs)
    if degeneracy(g)[0] > k:
        raise InvariantViolation(f"random_k_degenerate produced a graph with degeneracy > {k}")
    return g


def _three_plus_forest_attempt(n, rng):
    """
    骨架随机树 + 细分耳朵 + 悬挂点

    细分耳朵的内部点度数为 2，不会在 3+ 点之间增加边；
    悬挂点可能把 2 度点变成 3 度点，所以结果需要事后检查。
    """
    skeleton = min(n, max(2, n // 3 + 1))
    pairs = [(rng.randbelow(v), v) for v in range(1, skeleton)]
    next_id = skeleton
    while next_id < n:
        remaining = n - next_id
        if rng.coin():
            a, b = rng.sample(range(skeleton), 2)
            internal = min(remaining, 1 + rng.randbelow(2))
            prev = a
            for _ in range(internal):
                pairs.append((prev, next_id))
                prev = next_id
                next_id += 1
            pairs.append((prev, b))
        else:
            pairs.append((rng.randbelow(next_id), next_id))
            next_id += 1
    return build_graph(n, pairs)


def _random_three_plus_forest(n, seed):
    rng = SplitMix64(seed)
    for _ in range(MAX_ATTEMPTS):
        g = _three_plus_forest_attempt(n, rng)
        if is_three_plus_forest(g):
            return g
    raise BadSpec(f"no valid random_three_plus_forest graph after {MAX_ATTEMPTS} attempts (n={n}, seed={seed})")


def generate(spec):
    """
    按规格生成图（相同规格和 seed 得到相同的图）

    Args:
        spec: GenSpec

    Returns:
        Graph

    Raises:
        BadSpec
    """
    validate_spec(spec)
    p = spec.params
    kind = spec.kind
    if kind == 'cycle':
        return _cycle(p['n'])
    if kind == 'corona_cycle':
        return _corona_cycle(p['n'])
    if kind == 'c5_blowup':
        return _c5_blowup(p['t'])
    if kind == 'double_star':
        return _double_star(p['a'], p['b'])
    if kind == 'theta':
        return _theta(p['a'], p['b'], p['c'])
    if kind == 'path':
        return _path(p['n'])
    if kind == 'star':
        return _star(p['n'])
    if kind == 'complete':
        return _complete(p['n'])
    if kind == 'random_k_degenerate':
        return _random_k_degenerate(p['n'], p['k'], spec.seed)
    return _random_three_plus_forest(p['n'], spec.seed)
