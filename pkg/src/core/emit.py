# -*- coding: utf-8 -*-
"""
bruhat_system - 出力モジュール
レポートを決定的な JSON に変換し、--pretty では pandas の表として描画する
"""

import json
from typing import Any, Optional

import pandas as pd

from core.rootsys import WeylElement


def to_jsonable(value: Any) -> Any:
    """to_dict を持つオブジェクト・ワイル群元・タプル・集合を JSON 互換に直す"""
    if hasattr(value, "to_list"):
        # 重み多重集合はエントリ列そのもの
        return to_jsonable(value.to_list())
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, WeylElement):
        return value.format()
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [to_jsonable(v) for v in sorted(value)]
    if hasattr(value, "item"):
        # numpy のスカラー
        return value.item()
    return value


def emit(value: Any, indent: Optional[int] = 2) -> str:
    """キー順固定の JSON 文字列"""
    return json.dumps(to_jsonable(value), sort_keys=True, ensure_ascii=False, indent=indent)


def render_pretty(value: Any, table_key: Optional[str] = None) -> str:
    """table_key が指すレコード列を表にする。該当がなければ JSON にする"""
    data = to_jsonable(value)
    rows = data.get(table_key) if isinstance(data, dict) and table_key else data
    if not isinstance(rows, list) or not rows or not all(isinstance(r, dict) for r in rows):
        return emit(data)
    frame = pd.DataFrame(
        [{k: (json.dumps(v, ensure_ascii=False) if isinstance(v, (list, dict)) else v) for k, v in r.items()}
         for r in rows]
    )
    with pd.option_context("display.max_rows", None, "display.max_columns", None, "display.width", 200):
        return frame.to_string(index=False)
