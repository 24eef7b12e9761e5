# -*- coding: utf-8 -*-
"""
bruhat_system - orders コマンド
鏡映順序の列挙、または与えた語・ルート列の順序の検査
"""

from typing import Any, Dict, List

from core.command_base import CommandBase, CommandResult
from core.command_manager import register_command
from core.reforder import count_reduced_words, enumerate_orders, parse_order, pi_gt
from infra.logger import logger


@register_command
class OrdersCommand(CommandBase):
    """鏡映順序"""

    COMMAND_NAME = "orders"
    COMMAND_LABEL = "鏡映順序"
    COMMAND_DESCRIPTION = "鏡映順序を列挙する。語またはルート列を与えるとその順序を検査する"

    def validate_params(self, params: Dict[str, Any]) -> List[str]:
        issues = super().validate_params(params)
        if params.get("word") and params.get("roots"):
            issues.append("word と roots は同時に指定できません")
        limit = params.get("limit")
        if limit is not None and int(limit) < 0:
            issues.append("limit は 0 以上で指定してください")
        return issues

    def execute(self, params: Dict[str, Any]) -> CommandResult:
        system = self.root_system(params)
        given = params.get("word") or params.get("roots")
        if given:
            order = parse_order(system, given)
            data = order.to_dict()
            data["suffix_products"] = [pi_gt(order, n).format() for n in range(len(order) + 1)]
            return CommandResult(success=True, message="valid reflection order", data=data)

        max_rank = self.settings.max_exhaustive_rank if self.settings is not None else 4
        orders = list(enumerate_orders(system, max_rank))
        logger.debug(f"鏡映順序を列挙しました: {system.cartan_label} {len(orders)} 件")
        limit = params.get("limit")
        shown = orders if limit is None else orders[: int(limit)]
        data = {
            "type": system.cartan_label,
            "count": len(orders),
            "reduced_word_count": count_reduced_words(system.w0),
            "orders": [o.to_dict() for o in shown],
        }
        return CommandResult(success=True, message=f"{len(orders)} orders", data=data, table_key="orders")
