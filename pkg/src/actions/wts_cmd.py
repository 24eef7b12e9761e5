# -*- coding: utf-8 -*-
"""
bruhat_system - wts コマンド
重み多重集合 wts(u⇒v⇢v′) を窓付きで出力するプラグイン
"""

from typing import Any, Dict

from core.command_base import CommandBase, CommandResult
from core.command_manager import register_command
from core.dbg import parse_window, wts_multiset


@register_command
class WtsCommand(CommandBase):
    """重み多重集合"""

    COMMAND_NAME = "wts"
    COMMAND_LABEL = "重み多重集合"
    COMMAND_DESCRIPTION = "wts(u⇒v⇢v′) を窓付きで計算する"

    def execute(self, params: Dict[str, Any]) -> CommandResult:
        system = self.root_system(params)
        u = system.parse_word(params["from"])
        v = system.parse_word(params["to"])
        v2 = system.parse_word(params["via"])
        window = parse_window(system, params["weights"])
        multiset = wts_multiset(u, v, v2, window)
        return CommandResult(success=True, message=f"{len(multiset.entries)} entries", data=multiset)
