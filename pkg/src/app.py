# -*- coding: utf-8 -*-
"""
bruhat_system - エントリーポイント
二重ブリュア・グラフと ADLV の計算 CLI（標準出力は JSON のみ）
"""

import sys
from pathlib import Path
from typing import List, Optional

# src フォルダをパスに追加
if getattr(sys, "frozen", False):
    base_path = Path(sys.executable).parent
else:
    base_path = Path(__file__).parent
    if str(base_path) not in sys.path:
        sys.path.insert(0, str(base_path))

# vendor ライブラリのパス追加
vendor_path = base_path.parent / "vendor"
if vendor_path.exists() and str(vendor_path) not in sys.path:
    sys.path.insert(0, str(vendor_path))


def run(argv: Optional[List[str]] = None) -> int:
    """
    コマンドを 1 件実行して終了コードを返す

    Returns:
        0: 成功 / 1: 領域外入力・検証失敗 / 2: 引数の解析失敗
    """
    from core.command_manager import CommandManager, load_plugins
    from core.config_manager import ConfigManager
    from core.emit import emit, render_pretty
    from core.param_schema import build_parser, params_from_namespace

    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as e:
        # --help は 0、解析失敗は 2
        return 0 if e.code in (0, None) else 2

    config = ConfigManager(config_dir=Path(ns.config_dir) if ns.config_dir else None)
    config.load()
    load_plugins()

    result = CommandManager(config).run_command(ns.command, params_from_namespace(ns.command, ns))
    if getattr(ns, "pretty", False) and result.success:
        text = render_pretty(result.data, result.table_key)
    else:
        text = emit(result.payload(), config.settings.indent)
    sys.stdout.write(text + "\n")
    sys.stdout.flush()
    return result.exit_code


def main():
    """メインエントリーポイント"""
    sys.exit(run())


if __name__ == "__main__":
    main()
