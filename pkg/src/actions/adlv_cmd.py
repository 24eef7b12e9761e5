# -*- coding: utf-8 -*-
"""
bruhat_system - adlv コマンド
ADLV の非空性・次元・既約成分数を判定するプラグイン
"""

from typing import Any, Dict

from core.adlv import adlv_analyze, generic_newton_superregular, hyperspecial_crosscheck, make_sigma_class
from core.affine import parse_affine
from core.command_base import CommandBase, CommandResult
from core.command_manager import register_command
from core.errors import DomainRejection


@register_command
class AdlvCommand(CommandBase):
    """ADLV 解析"""

    COMMAND_NAME = "adlv"
    COMMAND_LABEL = "ADLV 解析"
    COMMAND_DESCRIPTION = "非空性・次元・既約成分数を判定する"

    def execute(self, params: Dict[str, Any]) -> CommandResult:
        system = self.root_system(params)
        x = parse_affine(system, params["x"])
        b = make_sigma_class(system, system.parse_coweight(params["nu"]))

        if params.get("hyperspecial"):
            if x.w != system.w0:
                raise DomainRejection("not_hyperspecial", "--hyperspecial needs x = w0 t^mu", x=x.format())
            check = hyperspecial_crosscheck(system, x.mu, b, self.threads)
            data = check.report.to_dict()
            extra = check.to_dict()
            extra.pop("report")
            data["hyperspecial"] = extra
        else:
            data = adlv_analyze(x, b, self.threads).to_dict()

        generic = generic_newton_superregular(x)
        data["generic_newton"] = None if generic is None else list(generic)
        return CommandResult(success=True, message=data["verdict"], data=data, table_key="E")
