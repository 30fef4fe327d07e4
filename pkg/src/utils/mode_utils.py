"""
着色模式字符串解析和校验工具函数

模式格式：
- degenerate:auto  k 取图的退化度
- degenerate:K     显式给出 k（正整数）
- forest           3+ 点导出森林的图类
"""
from models import ColoringMode, DEGENERATE, FOREST


def parse_mode(mode_string: str) -> ColoringMode:
    """
    解析模式字符串

    Args:
        mode_string: 如 "degenerate:auto", "degenerate:2", "forest"

    Returns:
        ColoringMode

    Raises:
        ValueError: 格式不正确

    Examples:
        >>> parse_mode("degenerate:auto").is_auto
        True
        >>> parse_mode("degenerate:3").k
        3
        >>> parse_mode("forest").is_forest
        True
    """
    if not isinstance(mode_string, str):
        raise ValueError(f"Invalid mode: {mode_string!r}")

    text = mode_string.strip().lower()
    if text == FOREST:
        return ColoringMode.forest()

    kind, sep, arg = text.partition(':')
    if kind != DEGENERATE:
        raise ValueError(f"Invalid mode: {mode_string}. Expected degenerate:auto, degenerate:K or forest")

    # "degenerate" 不带参数时等同于 auto
    if not sep or arg == 'auto':
        return ColoringMode.degenerate()

    if not arg.isdigit() or int(arg) < 1:
        raise ValueError(f"Invalid k in mode: {mode_string}. k must be a positive integer")
    return ColoringMode.degenerate(int(arg))


def validate_mode(mode_string: str) -> bool:
    """
    验证模式字符串格式是否正确

    Examples:
        >>> validate_mode("forest")
        True
        >>> validate_mode("degenerate:0")
        False
    """
    try:
        parse_mode(mode_string)
        return True
    except ValueError:
        return False
