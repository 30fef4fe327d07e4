"""
批量实验服务
对一个图族的多个实例运行贪心着色，检查上界，必要时和精确值对照
"""
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, asdict, field
from typing import List, Optional

from tqdm import tqdm

from errors import TimeBudgetExceeded
from models import BenchRun, BenchRecord, SearchLimits
from utils import SplitMix64, derive_seeds
from .coloring_service import (
    greedy_strong_coloring, greedy_list_strong_coloring, verify_strong_coloring,
    resolve_palette, random_color_lists,
)
from .exact_service import exact_strong_chromatic_index, strong_clique_lower_bound
from .generator_service import generate


@dataclass(frozen=True)
class BenchTask:
    """单个实例的输入（需要能被子进程 pickle）"""

    index: int
    spec: object
    mode: object
    lists: bool
    exact: bool
    limits: SearchLimits


@dataclass(frozen=True)
class BenchRow:
    """单个实例的结果"""

    index: int
    seed: int
    n: int
    m: int
    delta: int
    k: Optional[int]
    bound: int
    colors_used: int
    valid: bool
    lower_bound: Optional[int] = None
    exact: Optional[int] = None
    list_mode: bool = False

    @property
    def within_bound(self):
        # 列表着色的颜色值来自各自的列表，只要求着色成功
        return self.list_mode or self.colors_used <= self.bound

    @property
    def sandwich_ok(self):
        """lower_bound <= exact <= colors_used <= bound"""
        if self.exact is None:
            return True
        return self.lower_bound <= self.exact <= self.colors_used and self.within_bound

    @property
    def ok(self):
        return self.valid and self.within_bound and self.sandwich_ok

    def to_dict(self):
        return asdict(self)


@dataclass
class BenchSummary:
    family: str
    mode: str
    seed: int
    count: int
    lists: bool
    rows: List[BenchRow] = field(default_factory=list)

    @property
    def violations(self):
        return sum(1 for r in self.rows if not r.ok)

    @property
    def max_colors_used(self):
        return max((r.colors_used for r in self.rows), default=0)

    @property
    def max_ratio(self):
        """colors_used / bound 的最大值"""
        return max((r.colors_used / r.bound for r in self.rows if r.bound), default=0.0)

    def summary_dict(self):
        return {
            'count': self.count,
            'violations': self.violations,
            'max_colors_used': self.max_colors_used,
            'max_ratio': round(self.max_ratio, 4),
            'exact_runs': sum(1 for r in self.rows if r.exact is not None),
        }

    def to_dict(self):
        return {
            'family': self.family,
            'mode': self.mode,
            'seed': self.seed,
            'lists': self.lists,
            'instances': [r.to_dict() for r in self.rows],
            'summary': self.summary_dict(),
        }

    def to_table(self):
        """文本表格，每个实例一行，最后是汇总"""
        header = "index seed n m delta k bound colors_used exact valid"
        lines = [header]
        for r in self.rows:
            lines.append(' '.join(str(x) for x in (
                r.index, r.seed, r.n, r.m, r.delta,
                '-' if r.k is None else r.k, r.bound, r.colors_used,
                '-' if r.exact is None else r.exact, str(r.valid).lower(),
            )))
        s = self.summary_dict()
        lines.append(f"# summary count={s['count']} violations={s['violations']} "
                     f"max_colors_used={s['max_colors_used']} max_ratio={s['max_ratio']} "
                     f"exact_runs={s['exact_runs']}")
        return ''.join(line + '\n' for line in lines)


def run_instance(task):
    """运行一个实例（模块级函数，供进程池调用）"""
    g = generate(task.spec)
    palette, _ = resolve_palette(g, task.mode)

    if task.lists:
        # 列表大小恰好为调色板大小，颜色取自 3 倍大小的全集
        list_seed = SplitMix64(task.spec.seed ^ task.index).next_u64()
        lists = random_color_lists(g, palette.size, 3 * palette.size, list_seed)
        coloring = greedy_list_strong_coloring(g, lists, task.mode)
    else:
        coloring = greedy_strong_coloring(g, task.mode).coloring

    report = verify_strong_coloring(g, coloring)

    lower, exact = None, None
    if task.exact and g.m <= task.limits.max_edges:
        try:
            exact, _ = exact_strong_chromatic_index(g, task.limits)
            lower = strong_clique_lower_bound(g)
        except TimeBudgetExceeded:
            exact = None

    return BenchRow(
        index=task.index,
        seed=task.spec.seed,
        n=g.n,
        m=g.m,
        delta=g.max_degree(),
        k=palette.k,
        bound=palette.size,
        colors_used=coloring.colors_used,
        valid=report.valid,
        lower_bound=lower,
        exact=exact,
        list_mode=task.lists,
    )


class BenchService:
    """批量实验类"""

    def __init__(self, repository=None):
        """
        Args:
            repository: 可选的 BenchRepository，用于保存结果
        """
        self.repository = repository

    def build_tasks(self, spec, count, seed, mode, lists=False, exact=False, limits=None):
        """随机图族的第 i 个实例使用 seed 派生的第 i 个 seed；确定性图族每次相同"""
        limits = limits or SearchLimits()
        seeds = derive_seeds(seed, count) if spec.is_random else [spec.seed] * count
        return [
            BenchTask(i, spec.with_seed(s), mode, lists, exact, limits)
            for i, s in enumerate(seeds)
        ]

    def run(self, spec, count, seed, mode, lists=False, exact=False, limits=None,
            workers=1, progress=None):
        """
        运行批量实验

        Args:
            spec: GenSpec（图族）
            count: 实例数
            seed: 总 seed
            mode: ColoringMode
            lists: 是否使用随机列表着色
            exact: 是否对小实例运行精确搜索
            workers: 进程数；结果始终按实例顺序返回
            progress: tqdm 的 disable 取反；None 表示仅在终端上显示

        Returns:
            BenchSummary
        """
        tasks = self.build_tasks(spec, count, seed, mode, lists, exact, limits)
        summary = BenchSummary(family=str(spec), mode=str(mode), seed=seed, count=count, lists=lists)
        disable = None if progress is None else not progress

        if workers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = pool.map(run_instance, tasks)
                summary.rows = list(tqdm(results, total=len(tasks), file=sys.stderr, disable=disable))
        else:
            summary.rows = [run_instance(t) for t in tqdm(tasks, file=sys.stderr, disable=disable)]
        return summary

    @staticmethod
    def to_run(summary):
        """BenchSummary -> BenchRun（连同每个实例的 BenchRecord）"""
        run = BenchRun(
            family=summary.family,
            mode=summary.mode,
            seed=summary.seed,
            count=summary.count,
            list_mode=summary.lists,
            violations=summary.violations,
            max_colors_used=summary.max_colors_used,
        )
        for r in summary.rows:
            run.records.append(BenchRecord(
                instance_index=r.index,
                seed=r.seed,
                n=r.n,
                m=r.m,
                delta=r.delta,
                k=r.k,
                bound=r.bound,
                colors_used=r.colors_used,
                valid=r.valid,
                exact=r.exact,
            ))
        return run

    def save(self, summary):
        """
        把实验结果写入数据库

        Returns:
            BenchRun 或 None（没有配置 repository 或保存失败）
        """
        if self.repository is None:
            return None

        run = self.to_run(summary)
        if self.repository.save(run):
            print(f"✓ 实验已保存: #{run.id}", file=sys.stderr)
            return run
        return None

    def save_all(self, summaries):
        """
        一次提交保存多次实验

        Returns:
            list[BenchRun]：保存成功的实验（没有 repository 或提交失败时为空）
        """
        if self.repository is None or not summaries:
            return []

        runs = [self.to_run(s) for s in summaries]
        saved, failed = self.repository.save_batch(runs)
        if failed:
            return []
        print(f"✓ 已保存 {saved} 个实验: " + ', '.join(f"#{r.id}" for r in runs), file=sys.stderr)
        return runs
