"""
主程序入口
强边着色工具的命令行界面：analyze / color / verify / exact / generate / bounds / bench

stdout 只输出数据（可以接管道），进度和错误信息都写到 stderr
"""
import sys
import json
import argparse
from dataclasses import dataclass
from typing import Optional

from errors import StrongEdgeError, BadSpec
from models import SearchLimits, StarDecomposition
from services import (
    FORMATS, GRAPH6,
    load_graph, read_source, serialize_graph, serialize_coloring,
    parse_coloring, parse_color_lists,
    structure_report, build_star_sequence,
    resolve_palette, bound_table, greedy_strong_coloring, greedy_list_strong_coloring,
    verify_strong_coloring,
    exact_strong_chromatic_index, strong_clique_lower_bound,
    parse_gen_spec, generate,
    BenchService,
)
from utils import parse_mode, default_seed

# 退出码
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2

COMMANDS = ('analyze', 'color', 'verify', 'exact', 'generate', 'bounds', 'bench')


def build_parser():
    """构建命令行解析器"""
    # --format / --json 在子命令前后都可以写
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default=argparse.SUPPRESS,
                        help='输入图格式（默认按扩展名和内容判断）')
    common.add_argument('--json', action='store_true', default=argparse.SUPPRESS,
                        help='以 JSON 输出')

    parser = argparse.ArgumentParser(
        prog='strongedge',
        description='强边着色工具：退化图 / 3+ 点森林图的贪心着色、验证、精确搜索和批量实验',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
使用示例:
  python src/main.py generate cycle:5 | python src/main.py color -      # C5 的贪心着色
  python src/main.py color g.g6 --mode degenerate:2 --trace             # 指定 k 并输出分解
  python src/main.py color g.g6 --mode forest --lists lists.txt         # 列表着色
  python src/main.py verify g.g6 g.coloring                             # 验证着色
  python src/main.py exact g.g6 --max-edges 25 --timeout 30             # 精确强色指数
  python src/main.py bounds --k 2 --delta 3 --json                      # 各文献上界
  python src/main.py bench --family random_k_degenerate:n=30,k=2 --count 100 --seed 7
        """
    )
    parser.add_argument('--format', choices=FORMATS, default=None,
                        help='输入图格式（默认按扩展名和内容判断）')
    parser.add_argument('--json', action='store_true', default=False, help='以 JSON 输出')

    sub = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')

    p = sub.add_parser('analyze', parents=[common], help='结构检查')
    p.add_argument('file', nargs='?', default='-', help="图文件、URL 或 '-'（标准输入）")

    p = sub.add_parser('color', parents=[common], help='贪心强边着色')
    p.add_argument('file', nargs='?', default='-', help="图文件、URL 或 '-'（标准输入）")
    p.add_argument('--mode', default='degenerate:auto',
                   help='degenerate:auto / degenerate:K / forest（默认 degenerate:auto）')
    p.add_argument('--trace', action='store_true', help='以注释形式输出 Λ 分解')
    p.add_argument('--lists', metavar='FILE', help='颜色列表文件（每行 "u v c1 c2 ..."）')
    p.add_argument('--out', metavar='FILE', help='把着色文件写到 FILE')

    p = sub.add_parser('verify', parents=[common], help='验证着色')
    p.add_argument('graph', help='图文件')
    p.add_argument('coloring', help='着色文件（每行 "u v c"）')

    p = sub.add_parser('exact', parents=[common], help='精确强色指数')
    p.add_argument('file', nargs='?', default='-', help="图文件、URL 或 '-'（标准输入）")
    p.add_argument('--max-edges', type=int, default=30, help='边数上限（默认 30）')
    p.add_argument('--timeout', type=float, default=60.0, help='时间预算，秒（默认 60）')

    p = sub.add_parser('generate', parents=[common], help='生成图族实例')
    p.add_argument('spec', help='如 cycle:5、c5_blowup:2、random_k_degenerate:n=30,k=2,seed=7')
    p.add_argument('--out', choices=FORMATS, default=GRAPH6, help='输出格式（默认 graph6）')
    p.add_argument('--seed', type=lambda s: int(s, 0), default=None,
                   help='随机图族的 seed（默认取 STRONGEDGE_SEED，否则 0）')

    p = sub.add_parser('bounds', parents=[common], help='各文献上界')
    p.add_argument('--k', type=int, required=True)
    p.add_argument('--delta', type=int, required=True)

    p = sub.add_parser('bench', parents=[common], help='批量实验')
    p.add_argument('--family', required=True, help='图族规格，同 generate')
    p.add_argument('--count', type=int, default=10, help='实例数（默认 10）')
    p.add_argument('--seed', type=lambda s: int(s, 0), default=None,
                   help='总 seed（默认取 STRONGEDGE_SEED，否则 0）')
    p.add_argument('--mode', default='degenerate:auto')
    p.add_argument('--exact', action='store_true', help='对小实例运行精确搜索')
    p.add_argument('--max-edges', type=int, default=30)
    p.add_argument('--timeout', type=float, default=60.0)
    p.add_argument('--lists', choices=['none', 'random'], default='none',
                   help='random: 每条边随机抽取调色板大小的列表')
    p.add_argument('--workers', type=int, default=1, help='进程数（默认 1）')
    p.add_argument('--save', action='store_true', help='把结果保存到数据库')
    p.add_argument('--db', metavar='URL', help='数据库 URL（默认见 .env）')

    return parser


@dataclass(frozen=True)
class CliConfig:
    """校验后的命令行配置"""

    command: str
    fmt: Optional[str] = None
    output: str = 'text'
    mode: Optional[object] = None
    limits: Optional[SearchLimits] = None
    seed: int = 0

    @property
    def as_json(self):
        return self.output == 'json'

    @classmethod
    def from_args(cls, args):
        """
        在任何计算之前校验参数

        Raises:
            BadSpec: 模式字符串、搜索限制或 seed 不合法
        """
        mode = None
        if getattr(args, 'mode', None) is not None:
            try:
                mode = parse_mode(args.mode)
            except ValueError as e:
                raise BadSpec(str(e))

        limits = None
        if hasattr(args, 'max_edges'):
            if args.max_edges < 1 or args.timeout <= 0:
                raise BadSpec(f"invalid limits max_edges={args.max_edges} timeout={args.timeout}")
            limits = SearchLimits(max_edges=args.max_edges, time_budget=args.timeout)

        seed = 0
        if hasattr(args, 'seed'):
            if args.seed is not None:
                seed = args.seed
            else:
                try:
                    seed = default_seed()
                except ValueError as e:
                    raise BadSpec(str(e))

        if getattr(args, 'count', 1) < 1:
            raise BadSpec(f"count must be >= 1, got {args.count}")
        if getattr(args, 'workers', 1) < 1:
            raise BadSpec(f"workers must be >= 1, got {args.workers}")

        return cls(
            command=args.command,
            fmt=args.format,
            output='json' if args.json else 'text',
            mode=mode,
            limits=limits,
            seed=seed,
        )


def _dump(data):
    return json.dumps(data, indent=2, ensure_ascii=False) + '\n'


# ---------------------------------------------------------------------------
# 子命令
# ---------------------------------------------------------------------------

def cmd_analyze(args, config, stdin):
    g = load_graph(args.file, config.fmt, stdin=stdin)
    report = structure_report(g)
    if config.as_json:
        return EXIT_OK, _dump(report.to_dict())
    return EXIT_OK, ''.join(line + '\n' for line in report.to_lines())


def cmd_color(args, config, stdin):
    g = load_graph(args.file, config.fmt, stdin=stdin)

    if args.lists:
        lists = parse_color_lists(read_source(args.lists, stdin=stdin))
        coloring = greedy_list_strong_coloring(g, lists, config.mode)
        palette, resolved = resolve_palette(g, config.mode)
        decomposition = build_star_sequence(g, resolved) if resolved else StarDecomposition(config.mode)
    else:
        result = greedy_strong_coloring(g, config.mode)
        coloring, palette, decomposition = result.coloring, result.palette, result.decomposition

    report = verify_strong_coloring(g, coloring)
    summary = {
        'mode': str(palette.mode),
        'k': palette.k,
        'delta': palette.delta,
        'bound': palette.size,
        'colors_used': coloring.colors_used,
        'valid': report.valid,
    }

    header = [f"{key}: {str(value).lower() if isinstance(value, bool) else value}"
              for key, value in summary.items()]
    if args.trace:
        header.append("trace:")
        header.extend(step.to_line() for step in decomposition.steps)
    text = serialize_coloring(coloring, header)

    if args.out:
        with open(args.out, 'w', encoding='ascii') as f:
            f.write(text)
        print(f"✓ 着色已写入 {args.out}", file=sys.stderr)

    code = EXIT_OK if report.valid else EXIT_INVALID
    if config.as_json:
        return code, _dump(summary)
    return code, text


def cmd_verify(args, config, stdin):
    g = load_graph(args.graph, config.fmt, stdin=stdin)
    coloring = parse_coloring(read_source(args.coloring, stdin=stdin))
    report = verify_strong_coloring(g, coloring)
    code = EXIT_OK if report.valid else EXIT_INVALID

    if config.as_json:
        data = report.to_dict()
        data['colors_used'] = coloring.colors_used
        return code, _dump(data)

    lines = [f"valid: {str(report.valid).lower()}", f"colors_used: {coloring.colors_used}"]
    lines.extend(f"violation: {a} {b}" for a, b in report.violations)
    lines.extend(f"uncolored: {e}" for e in report.uncolored)
    return code, ''.join(line + '\n' for line in lines)


def cmd_exact(args, config, stdin):
    g = load_graph(args.file, config.fmt, stdin=stdin)
    chi, witness = exact_strong_chromatic_index(g, config.limits)
    lower = strong_clique_lower_bound(g)

    if config.as_json:
        return EXIT_OK, _dump({
            'chi': chi,
            'lower_bound': lower,
            'm': g.m,
            'witness': [[e.u, e.v, c] for e, c in witness.sorted_items()],
        })
    return EXIT_OK, serialize_coloring(witness, [f"chi: {chi}", f"lower_bound: {lower}"])


def cmd_generate(args, config, stdin):
    spec = parse_gen_spec(args.spec, default_seed=config.seed)
    g = generate(spec)
    data = serialize_graph(g, args.out).decode('ascii')
    if args.out == GRAPH6:
        data += '\n'
    return EXIT_OK, data


def cmd_bounds(args, config, stdin):
    table = bound_table(args.k, args.delta)
    if config.as_json:
        return EXIT_OK, _dump(table.to_dict())

    lines = [f"k: {table.k}", f"delta: {table.delta}"]
    lines.extend(f"{name}: {value}" for name, value in table.entries.items())
    lines.append(f"conjecture: {table.conjecture}")
    lines.append(f"trivial: {table.trivial}")
    if table.chordless_cn is not None:
        lines.append(f"chordless_cn: {table.chordless_cn}")
    return EXIT_OK, ''.join(line + '\n' for line in lines)


def _open_repository(url):
    """连接数据库并建表；失败时返回 (None, None)"""
    from database import Database
    from repositories import BenchRepository

    db = Database(url)
    if not db.test_connection() or not db.create_tables():
        print("⚠️ 数据库不可用，结果不会保存", file=sys.stderr)
        return None, None
    session = db.get_session()
    return BenchRepository(session), session


def cmd_bench(args, config, stdin):
    spec = parse_gen_spec(args.family, default_seed=config.seed)

    print("=" * 60, file=sys.stderr)
    print(f"批量实验: {spec} x{args.count} mode={config.mode} seed={config.seed}", file=sys.stderr)
    print("=" * 60, file=sys.stderr)

    repository, session = (None, None)
    if args.save:
        repository, session = _open_repository(args.db)

    try:
        service = BenchService(repository)
        summary = service.run(
            spec, args.count, config.seed, config.mode,
            lists=args.lists == 'random',
            exact=args.exact,
            limits=config.limits,
            workers=args.workers,
        )
        if repository is not None:
            service.save(summary)
    finally:
        if session is not None:
            session.close()

    code = EXIT_OK if summary.violations == 0 else EXIT_INVALID
    if config.as_json:
        return code, _dump(summary.to_dict())
    return code, summary.to_table()


_HANDLERS = {
    'analyze': cmd_analyze,
    'color': cmd_color,
    'verify': cmd_verify,
    'exact': cmd_exact,
    'generate': cmd_generate,
    'bounds': cmd_bounds,
    'bench': cmd_bench,
}


def dispatch(argv, stdin=None):
    """
    解析参数并执行一个子命令

    Args:
        argv: 参数列表（不含程序名）
        stdin: 可选的二进制输入流，替代 sys.stdin.buffer

    Returns:
        tuple: (退出码, stdout 文本)
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse 已经把用法错误写到 stderr
        return (e.code if isinstance(e.code, int) else EXIT_USAGE), ''

    try:
        config = CliConfig.from_args(args)
        return _HANDLERS[config.command](args, config, stdin)
    except StrongEdgeError as e:
        print(e.machine_line(), file=sys.stderr)
        return e.exit_code, ''
    except OSError as e:
        print(BadSpec(f"{e.filename}: {e.strerror}").machine_line(), file=sys.stderr)
        return EXIT_USAGE, ''


def main():
    """主函数"""
    code, output = dispatch(sys.argv[1:])
    sys.stdout.write(output)
    sys.stdout.flush()
    sys.exit(code)


if __name__ == "__main__":
    main()
