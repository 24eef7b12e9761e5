# -*- coding: utf-8 -*-
"""
bruhat_system - types コマンド
(x, u, ≺) の許容型と型多様体の次元を列挙するプラグイン
"""

from typing import Any, Dict

from core.admtypes import enumerate_admissible_types, type_dimension, type_to_path
from core.affine import ell_u, parse_affine
from core.command_base import CommandBase, CommandResult
from core.command_manager import register_command
from core.reforder import parse_order


@register_command
class TypesCommand(CommandBase):
    """許容型"""

    COMMAND_NAME = "types"
    COMMAND_LABEL = "許容型"
    COMMAND_DESCRIPTION = "(x, u, ≺) の許容型と次元を列挙する"

    def execute(self, params: Dict[str, Any]) -> CommandResult:
        system = self.root_system(params)
        x = parse_affine(system, params["x"])
        u = system.parse_word(params["u"])
        order = parse_order(system, params.get("order"))
        bound = params.get("bound")
        n = len(order) if bound is None else int(bound)
        types = enumerate_admissible_types(x, u, order, n)
        records = []
        for tau in types:
            record = tau.to_dict()
            record["cardinality"] = tau.cardinality
            record["dim"] = type_dimension(tau)
            record["path"] = type_to_path(tau).to_dict()
            records.append(record)
        data = {
            "x": x.format(),
            "u": u.format(),
            "order": order.to_dict(),
            "bound": n,
            "ell_u": ell_u(x, u),
            "count": len(types),
            "types": records,
        }
        return CommandResult(success=True, message=f"{len(types)} types", data=data, table_key="types")
