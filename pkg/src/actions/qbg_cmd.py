# -*- coding: utf-8 -*-
"""
bruhat_system - qbg コマンド
量子ブリュア・グラフ全体、または最短距離・最短道の重みを出力するプラグイン
"""

from typing import Any, Dict, List

from core.command_base import CommandBase, CommandResult
from core.command_manager import register_command
from core.dbg import parse_window
from core.qbg import build_qbg, qbg_dbg_compare, qbg_distance_weight


@register_command
class QbgCommand(CommandBase):
    """量子ブリュア・グラフ"""

    COMMAND_NAME = "qbg"
    COMMAND_LABEL = "量子ブリュア・グラフ"
    COMMAND_DESCRIPTION = "グラフ全体、または d(u⇒v) と wt(u⇒v) を出力する"

    def validate_params(self, params: Dict[str, Any]) -> List[str]:
        issues = super().validate_params(params)
        if bool(params.get("from")) != bool(params.get("to")):
            issues.append("from と to は両方指定してください")
        if params.get("window") and not params.get("from"):
            issues.append("window には from / to が必要です")
        return issues

    def execute(self, params: Dict[str, Any]) -> CommandResult:
        system = self.root_system(params)
        if not params.get("from"):
            graph = build_qbg(system)
            return CommandResult(success=True, message=f"{len(graph.edges)} edges",
                                 data=graph.to_dict(), table_key="edges")

        u = system.parse_word(params["from"])
        v = system.parse_word(params["to"])
        d, wt = qbg_distance_weight(u, v)
        data: Dict[str, Any] = {"from": u.format(), "to": v.format(), "d": d, "wt": list(wt)}
        if params.get("window"):
            data["comparison"] = qbg_dbg_compare(u, v, parse_window(system, params["window"])).to_dict()
        return CommandResult(success=True, message=f"d = {d}", data=data)
