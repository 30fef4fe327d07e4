#!/usr/bin/env python3
"""
实验套件运行脚本
从 YAML 文件读取一组 bench 配置并依次运行，可选择保存到数据库

使用方法：
  python scripts/run_suite.py --suite acceptance
  python scripts/run_suite.py --all --save         # 运行全部套件并保存结果
  python scripts/run_suite.py --validate           # 校验所有 YAML 文件
  python scripts/run_suite.py --list               # 查看已保存的实验
"""
import sys
import os
import argparse
import glob

# 添加 src 目录到 Python 路径
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from database import Database
from errors import StrongEdgeError
from repositories import BenchRepository
from services import BenchService, SuiteService

# YAML 文件目录
DATA_DIR = os.path.join(os.path.dirname(__file__), '..', 'data', 'suites')


def find_yaml_files(suite_ids=None):
    """
    查找套件文件

    Args:
        suite_ids: 指定的套件 ID 列表，如 ["acceptance"]。None 表示查找所有。

    Returns:
        list: [(suite_id, yaml_path), ...]
    """
    if suite_ids:
        files = []
        for sid in suite_ids:
            yaml_path = os.path.join(DATA_DIR, f"{sid.lower()}.yml")
            if os.path.exists(yaml_path):
                files.append((sid, yaml_path))
            else:
                print(f"⚠️ 未找到 YAML 文件: {yaml_path}")
        return files

    pattern = os.path.join(DATA_DIR, '*.yml')
    return [
        (os.path.splitext(os.path.basename(path))[0], path)
        for path in sorted(glob.glob(pattern))
    ]


def parse_args():
    """解析命令行参数"""
    parser = argparse.ArgumentParser(
        description='运行实验套件（从 YAML 文件）',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
使用示例:
  python scripts/run_suite.py --suite smoke                 # 运行 smoke 套件
  python scripts/run_suite.py --suite acceptance --save     # 运行并保存到数据库
  python scripts/run_suite.py --all --workers 4             # 多进程运行全部套件
  python scripts/run_suite.py --validate                    # 校验所有 YAML 文件（不需要数据库）
  python scripts/run_suite.py --list                        # 列出最近保存的实验
        """
    )

    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        '--suite',
        nargs='+',
        metavar='ID',
        help='指定要运行的套件 ID（如 acceptance smoke）'
    )
    group.add_argument(
        '--all',
        action='store_true',
        help='运行 data/suites/ 目录下的所有套件'
    )
    group.add_argument(
        '--validate',
        nargs='*',
        metavar='ID',
        help='仅校验 YAML 文件格式。不加 ID 则校验所有文件。'
    )
    group.add_argument(
        '--list',
        action='store_true',
        help='列出数据库中最近保存的实验'
    )

    parser.add_argument('--save', action='store_true', help='把结果保存到数据库')
    parser.add_argument('--db', metavar='URL', help='数据库 URL（默认见 .env）')
    parser.add_argument('--workers', type=int, default=1, help='进程数（默认 1）')
    parser.add_argument('--limit', type=int, default=20, help='--list 显示的条数（默认 20）')

    return parser.parse_args()


def run_validate(suite_ids):
    """仅做 schema 校验，不连接数据库"""
    print("=" * 60)
    print("套件 YAML Schema 校验")
    print("=" * 60)

    yaml_files = find_yaml_files(suite_ids if suite_ids else None)
    if not yaml_files:
        print("没有找到任何 YAML 文件")
        return

    print(f"校验 {len(yaml_files)} 个文件:\n")

    all_passed = True
    for sid, yaml_path in yaml_files:
        errors = SuiteService.validate_yaml(yaml_path)
        if errors:
            all_passed = False
            print(f"✗ {sid} ({os.path.basename(yaml_path)})")
            for msg in errors:
                print(msg)
        else:
            print(f"✓ {sid} ({os.path.basename(yaml_path)})")

    print()
    if all_passed:
        print("所有文件校验通过 ✓")
    else:
        print("部分文件存在错误，请修复后再运行 ✗")
        sys.exit(1)


def open_database(url):
    """初始化数据库连接；失败返回 None"""
    print("初始化数据库连接...")
    db = Database(url)
    if not db.test_connection():
        print("\n数据库连接失败，请检查 .env 配置")
        return None
    if not db.create_tables():
        print("\n数据表创建失败，程序终止")
        return None
    return db


def run_list(args):
    """列出最近保存的实验"""
    db = open_database(args.db)
    if db is None:
        sys.exit(1)
    session = db.get_session()
    repo = BenchRepository(session)
    print(f"\n共 {repo.count()} 次实验，最近 {args.limit} 次:\n")
    for run in repo.latest(args.limit):
        print(run)
    session.close()


def main():
    """主函数"""
    args = parse_args()

    # --validate 模式：不需要数据库
    if args.validate is not None:
        run_validate(args.validate)
        return

    if args.list:
        run_list(args)
        return

    print("=" * 60)
    print("实验套件运行")
    print("=" * 60)

    # 1. 查找 YAML 文件
    yaml_files = find_yaml_files() if args.all else find_yaml_files(args.suite)
    if not yaml_files:
        print("\n没有找到任何 YAML 文件")
        return

    print(f"找到 {len(yaml_files)} 个套件:")
    for sid, path in yaml_files:
        print(f"  • {sid}: {path}")
    print()

    # 2. 初始化数据库（仅 --save）
    session = None
    repo = None
    if args.save:
        db = open_database(args.db)
        if db is None:
            return
        session = db.get_session()
        repo = BenchRepository(session)

    # 3. 运行每个套件
    service = SuiteService(BenchService(repo))
    passed_count = 0
    failed_count = 0

    for idx, (sid, yaml_path) in enumerate(yaml_files, 1):
        print(f"\n[{idx}/{len(yaml_files)}] 运行 {sid}")
        print("-" * 60)

        try:
            suite = SuiteService.load_suite(yaml_path)
            result = service.run_suite(suite, save=args.save, workers=args.workers)
        except StrongEdgeError as e:
            print(f"✗ 套件 {sid} 失败: {e.machine_line()}")
            failed_count += 1
            continue

        if result.passed:
            passed_count += 1
        else:
            print(f"✗ 套件 {sid} 有 {result.violations} 个违例")
            failed_count += 1

    # 4. 关闭会话
    if session is not None:
        session.close()

    # 5. 汇总
    print("\n" + "=" * 60)
    print(f"运行完成！通过: {passed_count}, 失败: {failed_count}")
    print("=" * 60)
    if failed_count:
        sys.exit(1)


if __name__ == "__main__":
    main()
