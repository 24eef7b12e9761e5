# -*- coding: utf-8 -*-
"""
bruhat_system - intersect コマンド
半無限軌道との交叉の片と次元を数えるプラグイン
"""

from typing import Any, Dict

from core.admtypes import intersection_counts_from_wts, intersection_via_types, semi_infinite_intersection
from core.affine import parse_affine
from core.command_base import CommandBase, CommandResult
from core.command_manager import register_command
from infra.logger import logger


@register_command
class IntersectCommand(CommandBase):
    """半無限軌道との交叉"""

    COMMAND_NAME = "intersect"
    COMMAND_LABEL = "半無限軌道との交叉"
    COMMAND_DESCRIPTION = "片の次元の国勢調査を出力する"

    def execute(self, params: Dict[str, Any]) -> CommandResult:
        system = self.root_system(params)
        u = system.parse_word(params["u"])
        v = system.parse_word(params["v"])
        x = parse_affine(system, params["x"])
        y = parse_affine(system, params["y"])
        census = semi_infinite_intersection(u, v, x, y)
        data = census.to_dict()
        data["counts_by_dim"] = census.counts_by_dim()

        if params.get("order_check"):
            via_types = intersection_via_types(u, v, x, y).counts_by_dim()
            via_wts = intersection_counts_from_wts(u, v, x, y)
            agree = census.counts_by_dim() == via_types == via_wts
            if not agree:
                logger.warning(f"交叉の次元別個数が一致しません: paths={census.counts_by_dim()}, "
                               f"types={via_types}, wts={via_wts}")
            data["order_check"] = {"types": via_types, "wts": via_wts, "agree": agree}
        return CommandResult(success=True, message=f"dim = {data['dim']}", data=data, table_key="pieces")
