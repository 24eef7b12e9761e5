# -*- coding: utf-8 -*-
"""
bruhat_system - サブコマンド別パラメータスキーマ定義
argparse のパーサ生成と、コマンドの直列化・再解析に使用する
"""

import argparse
from typing import Any, Dict, List, Optional, Sequence, Tuple

VERIFY_SUITES = ["orders", "dbg-invariance", "qbg", "bijection", "lengths", "adlv-crosscheck", "determinism", "all"]
GOLDEN_ACTIONS = ["list", "run", "validate", "add", "update", "delete"]

_TYPE_FIELD = {
    "key": "type",
    "flag": "--type",
    "label": "カルタン型",
    "type": "text",
    "required": True,
    "help": "A2, B3, G2 などのカルタン型ラベル",
}


def _text(key: str, label: str, required: bool = False, help: str = "", flag: Optional[str] = None) -> Dict[str, Any]:
    return {
        "key": key,
        "flag": flag or f"--{key.replace('_', '-')}",
        "label": label,
        "type": "text",
        "required": required,
        "help": help,
    }


PARAM_SCHEMAS: Dict[str, Dict[str, Any]] = {
    "rootsys": {
        "label": "ルート系",
        "description": "カルタン行列・正ルート・正コルート・2ρ を出力する",
        "fields": [_TYPE_FIELD],
    },
    "orders": {
        "label": "鏡映順序",
        "description": "鏡映順序を列挙する。語またはルート列を与えるとその順序を検査する",
        "fields": [
            _TYPE_FIELD,
            _text("word", "w₀ の簡約語", help='"s1 s2 s1" 形式'),
            _text("roots", "ルート列", help='"1,0;1,1;0,1" 形式'),
            {"key": "limit", "flag": "--limit", "label": "出力件数の上限", "type": "int",
             "required": False, "default": None},
        ],
    },
    "dbg-paths": {
        "label": "増加道の列挙",
        "description": "重みを固定した増加ラベル付き道を全て列挙する",
        "fields": [
            _TYPE_FIELD,
            _text("order", "鏡映順序", help="空なら標準順序。語かルート列"),
            {"key": "bound", "flag": "--bound", "label": "添字の上限 n", "type": "int",
             "required": False, "default": None, "help": "省略時は #Φ⁺"},
            _text("from", "始点", required=True),
            _text("to", "終点", required=True),
            _text("weight", "重み", required=True, help="コルート基底の整数ベクトル"),
        ],
    },
    "wts": {
        "label": "重み多重集合",
        "description": "wts(u⇒v⇢v′) を窓付きで計算する",
        "fields": [
            _TYPE_FIELD,
            _text("from", "u", required=True),
            _text("to", "v", required=True),
            _text("via", "v′", required=True),
            _text("weights", "重みの窓", required=True, help='";" 区切りの重み、または "2rho"'),
        ],
    },
    "qbg": {
        "label": "量子ブリュア・グラフ",
        "description": "グラフ全体、または d(u⇒v) と wt(u⇒v) を出力する",
        "fields": [
            _TYPE_FIELD,
            _text("from", "u"),
            _text("to", "v"),
            _text("window", "比較用の窓", help="指定すると wts との比較を行う"),
        ],
    },
    "types": {
        "label": "許容型",
        "description": "(x, u, ≺) の許容型と次元を列挙する",
        "fields": [
            _TYPE_FIELD,
            _text("x", "x = w t^μ", required=True, help='"s1 s2 s1;1,1" 形式'),
            _text("u", "u", required=True),
            _text("order", "鏡映順序"),
            {"key": "bound", "flag": "--bound", "label": "添字の上限 n", "type": "int",
             "required": False, "default": None},
        ],
    },
    "intersect": {
        "label": "半無限軌道との交叉",
        "description": "片の次元の国勢調査を出力する",
        "fields": [
            _TYPE_FIELD,
            _text("u", "u", required=True),
            _text("v", "v", required=True),
            _text("x", "x", required=True),
            _text("y", "y", required=True),
            {"key": "order_check", "flag": "--order-check", "label": "型と wts による再計算",
             "type": "bool", "required": False, "default": False},
        ],
    },
    "adlv": {
        "label": "ADLV 解析",
        "description": "非空性・次元・既約成分数を判定する",
        "fields": [
            _TYPE_FIELD,
            _text("x", "x = w t^μ", required=True),
            _text("nu", "ν(b)", required=True, help="支配的な整数コウェイト"),
            {"key": "hyperspecial", "flag": "--hyperspecial", "label": "コスタント照合",
             "type": "bool", "required": False, "default": False,
             "help": "x = w₀t^μ の場合にコスタント分配関数と照合する"},
        ],
    },
    "verify": {
        "label": "検証スイート",
        "description": "不変量の検査群を実行する",
        "fields": [
            {"key": "suite", "label": "スイート名", "type": "select", "positional": True,
             "required": True, "options": VERIFY_SUITES},
            _TYPE_FIELD,
            _text("window", "窓", help='"2rho" または "2,2" のような上隅'),
            {"key": "force", "flag": "--force", "label": "上限の解除", "type": "bool",
             "required": False, "default": False},
        ],
    },
    "goldens": {
        "label": "ゴールデン問い合わせ",
        "description": "goldens.yaml の一覧・一括実行・検査・編集を行う",
        "fields": [
            {"key": "action", "label": "操作", "type": "select", "positional": True,
             "required": True, "options": GOLDEN_ACTIONS},
            _text("id", "問い合わせ ID", help="run では省略すると全件を実行する"),
            _text("name", "表示名"),
            _text("query", "コマンド行", help='"adlv --type A2 --x \'s1 s2 s1;10,10\' --nu 9,9" 形式'),
        ],
    },
}


def get_param_schema(command: str) -> Dict[str, Any]:
    """指定サブコマンドのパラメータスキーマを返す"""
    return PARAM_SCHEMAS.get(command, {"label": command, "fields": []})


def _add_field(parser: argparse.ArgumentParser, f: Dict[str, Any]) -> None:
    if f.get("positional"):
        parser.add_argument(f["key"], choices=f.get("options"), help=f["label"])
        return
    kwargs: Dict[str, Any] = {"dest": f["key"], "help": f.get("help") or f["label"]}
    if f["type"] == "bool":
        parser.add_argument(f["flag"], action="store_true", **kwargs)
        return
    if f["type"] == "int":
        kwargs["type"] = int
    parser.add_argument(f["flag"], required=f.get("required", False), default=f.get("default"), **kwargs)


def build_parser() -> argparse.ArgumentParser:
    """PARAM_SCHEMAS からサブコマンド付きパーサを生成する"""
    parser = argparse.ArgumentParser(prog="bruhat", description="double Bruhat graph toolkit")
    parser.add_argument("--config", dest="config_dir", default=None, help="設定フォルダ")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="表形式で出力する")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, schema in PARAM_SCHEMAS.items():
        sp = sub.add_parser(name, parents=[common], help=schema["label"], description=schema["description"])
        for f in schema["fields"]:
            _add_field(sp, f)
    return parser


def params_from_namespace(command: str, ns: argparse.Namespace) -> Dict[str, Any]:
    return {f["key"]: getattr(ns, f["key"]) for f in get_param_schema(command)["fields"]}


def parse_command(argv: Sequence[str]) -> Tuple[str, Dict[str, Any]]:
    """argv をサブコマンド名とパラメータに解析する（失敗時は SystemExit(2)）"""
    ns = build_parser().parse_args(list(argv))
    return ns.command, params_from_namespace(ns.command, ns)


def command_to_argv(command: str, params: Dict[str, Any]) -> List[str]:
    """parse_command の逆。既定値と等しい項目は省く"""
    argv = [command]
    fields = get_param_schema(command)["fields"]
    for f in fields:
        if f.get("positional"):
            argv.append(str(params[f["key"]]))
    for f in fields:
        if f.get("positional"):
            continue
        value = params.get(f["key"], f.get("default"))
        if value is None or value == f.get("default"):
            continue
        if f["type"] == "bool":
            if value:
                argv.append(f["flag"])
            continue
        # "-1,0" のような負号始まりの値も読めるように = で結合する
        argv.append(f"{f['flag']}={value}")
    return argv
