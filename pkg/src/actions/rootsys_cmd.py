# -*- coding: utf-8 -*-
"""
bruhat_system - rootsys コマンド
カルタン行列・正ルート・正コルート・2ρ を出力するプラグイン
"""

from typing import Any, Dict

from core.command_base import CommandBase, CommandResult
from core.command_manager import register_command


@register_command
class RootSystemCommand(CommandBase):
    """ルート系の基本データ"""

    COMMAND_NAME = "rootsys"
    COMMAND_LABEL = "ルート系"
    COMMAND_DESCRIPTION = "カルタン行列・正ルート・正コルート・2ρ を出力する"

    def execute(self, params: Dict[str, Any]) -> CommandResult:
        system = self.root_system(params)
        data = system.to_dict()
        data["roots"] = [
            {"root": list(system.roots[r]), "coroot": list(system.coroots[r]), "length": system.length_class[r]}
            for r in system.positive_ids
        ]
        data["highest_root"] = list(system.roots[system.highest_root_id])
        data["longest_element"] = system.w0.format()
        return CommandResult(success=True, message=system.cartan_label, data=data, table_key="roots")
