# -*- coding: utf-8 -*-
"""
bruhat_system - dbg-paths コマンド
重みを固定した増加ラベル付き道を全て列挙するプラグイン
"""

from typing import Any, Dict

from core.command_base import CommandBase, CommandResult
from core.command_manager import register_command
from core.dbg import enumerate_increasing_paths
from core.reforder import parse_order


@register_command
class DbgPathsCommand(CommandBase):
    """二重ブリュア・グラフの増加道"""

    COMMAND_NAME = "dbg-paths"
    COMMAND_LABEL = "増加道の列挙"
    COMMAND_DESCRIPTION = "重みを固定した増加ラベル付き道を全て列挙する"

    def execute(self, params: Dict[str, Any]) -> CommandResult:
        system = self.root_system(params)
        order = parse_order(system, params.get("order"))
        bound = params.get("bound")
        n = len(order) if bound is None else int(bound)
        u = system.parse_word(params["from"])
        v = system.parse_word(params["to"])
        weight = system.parse_coweight(params["weight"])
        paths = enumerate_increasing_paths(order, n, u, v, weight)
        self._notify_progress(f"{len(paths)} 本の道", 100)
        records = []
        for p in paths:
            record = p.to_dict()
            record.update({"length": p.length, "weight": list(p.weight), "short": p.short_count, "long": p.long_count})
            records.append(record)
        data = {
            "order": order.to_dict(),
            "bound": n,
            "from": u.format(),
            "to": v.format(),
            "weight": list(weight),
            "count": len(paths),
            "paths": records,
        }
        return CommandResult(success=True, message=f"{len(paths)} paths", data=data, table_key="paths")
