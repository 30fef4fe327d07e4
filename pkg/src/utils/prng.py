"""
SplitMix64 伪随机数生成器

随机图族和随机列表都使用这个固定算法，保证相同 seed 在任何实现上
得到相同的图（golden 测试可移植）。

状态更新：
    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB mod 2^64
    输出 z ^ (z >> 31)

randbelow(n) 用拒绝采样去掉取模偏差。
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """可设种子的 64 位 PRNG"""

    def __init__(self, seed=0):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randbelow(self, n):
        """[0, n) 上的均匀整数"""
        if n <= 0:
            raise ValueError(f"randbelow requires n > 0, got {n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def sample(self, population, count):
        """
        无放回抽样（部分 Fisher–Yates）

        Returns:
            list: 按抽取顺序排列的 count 个元素
        """
        pool = list(population)
        if count > len(pool):
            raise ValueError(f"sample larger than population: {count} > {len(pool)}")
        for i in range(count):
            j = i + self.randbelow(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:count]

    def coin(self):
        return self.next_u64() >> 63 == 1


def derive_seeds(seed, count):
    """
    由一个 seed 派生 count 个实例 seed（第 i 个实例用第 i 个输出的高 63 位）

    取 63 位是为了能存进有符号 BIGINT 列。

    Examples:
        >>> len(derive_seeds(7, 3))
        3
    """
    rng = SplitMix64(seed)
    return [rng.next_u64() >> 1 for _ in range(count)]
