# -*- coding: utf-8 -*-
"""ConfigManager 単体テスト"""
import tempfile
from pathlib import Path

import pytest
import yaml

from core.command_manager import CommandManager, load_plugins, registry
from core.config_manager import ConfigManager, QueryConfig, Settings


@pytest.fixture
def tmp_config():
    """一時ディレクトリで初期化されたConfigManager"""
    with tempfile.TemporaryDirectory() as td:
        td = Path(td)
        settings_data = {
            "limits": {"max_exhaustive_rank": 3, "value_window": 2},
            "parallel": {"threads": 6, "env_var": "BRUHAT_TEST_THREADS"},
            "output": {"indent": None},
        }
        goldens_data = {"queries": [
            {"id": "q1", "name": "A2 ルート系", "command": "rootsys", "params": {"type": "A2"}},
            {"id": "q2", "name": "無効", "command": "rootsys", "enabled": False, "params": {"type": "B2"}},
            {"id": "q3", "name": "未知の型", "command": "rootsys", "params": {"type": "Z9"}},
        ]}
        with open(td / "settings.yaml", "w", encoding="utf-8") as f:
            yaml.dump(settings_data, f, allow_unicode=True)
        with open(td / "goldens.yaml", "w", encoding="utf-8") as f:
            yaml.dump(goldens_data, f, allow_unicode=True)

        cm = ConfigManager(config_dir=td)
        cm.load()
        yield cm


class TestSettings:

    def test_defaults(self):
        s = Settings()
        assert s.max_exhaustive_rank == 4
        assert s.value_window == 4
        assert s.adlv_scale == 5
        assert s.indent == 2

    def test_partial_override(self, tmp_config):
        s = tmp_config.settings
        assert s.max_exhaustive_rank == 3
        assert s.value_window == 2
        # 指定のない項目は既定値
        assert s.translation_bound == 3
        assert s.max_defect_pairing == 8
        assert s.indent is None

    def test_threads_env_cap(self, tmp_config, monkeypatch):
        monkeypatch.delenv("BRUHAT_TEST_THREADS", raising=False)
        assert tmp_config.settings.threads == 6
        monkeypatch.setenv("BRUHAT_TEST_THREADS", "2")
        assert tmp_config.settings.threads == 2
        monkeypatch.setenv("BRUHAT_TEST_THREADS", "0")
        assert tmp_config.settings.threads == 1
        monkeypatch.setenv("BRUHAT_TEST_THREADS", "many")
        assert tmp_config.settings.threads == 6

    def test_to_dict_roundtrip(self, tmp_config):
        again = Settings(tmp_config.settings.to_dict())
        assert again.to_dict() == tmp_config.settings.to_dict()

    def test_missing_files(self):
        with tempfile.TemporaryDirectory() as td:
            cm = ConfigManager(config_dir=Path(td))
            cm.load()
            assert cm.settings.max_exhaustive_rank == 4
            assert cm.get_all_queries() == []

    def test_not_a_mapping(self):
        with tempfile.TemporaryDirectory() as td:
            (Path(td) / "settings.yaml").write_text("- 1\n- 2\n", encoding="utf-8")
            cm = ConfigManager(config_dir=Path(td))
            cm.load()
            assert cm.settings.max_exhaustive_rank == 4


class TestQueries:

    def test_load(self, tmp_config):
        assert len(tmp_config._queries) == 3
        assert tmp_config._queries[0].params == {"type": "A2"}

    def test_get_all_excludes_disabled(self, tmp_config):
        assert [q.id for q in tmp_config.get_all_queries()] == ["q1", "q3"]

    def test_get_by_id(self, tmp_config):
        assert tmp_config.get_query_by_id("q1").command == "rootsys"
        assert tmp_config.get_query_by_id("q2") is None
        assert tmp_config.get_query_by_id("nonexistent") is None

    def test_to_dict(self):
        q = QueryConfig({"id": "x", "name": "n", "command": "qbg", "enabled": False, "params": {"type": "A1"}})
        assert q.to_dict() == {"id": "x", "name": "n", "command": "qbg", "enabled": False, "params": {"type": "A1"}}
        assert "enabled" not in QueryConfig({"id": "y", "command": "qbg"}).to_dict()


class TestQueryCRUD:

    def test_add(self, tmp_config):
        q = tmp_config.add_query({"id": "q4", "name": "新規", "command": "qbg", "params": {"type": "A1"}})
        assert q.id == "q4"
        assert tmp_config.get_query_by_id("q4") is not None

    def test_add_duplicate_raises(self, tmp_config):
        with pytest.raises(ValueError, match="重複"):
            tmp_config.add_query({"id": "q1", "command": "qbg"})

    def test_update(self, tmp_config):
        q = tmp_config.update_query("q1", {"name": "更新", "command": "rootsys", "params": {"type": "G2"}})
        assert q.id == "q1"
        assert tmp_config.get_query_by_id("q1").params == {"type": "G2"}

    def test_update_to_existing_id_raises(self, tmp_config):
        with pytest.raises(ValueError, match="重複"):
            tmp_config.update_query("q1", {"id": "q3", "command": "rootsys"})

    def test_update_missing_raises(self, tmp_config):
        with pytest.raises(KeyError):
            tmp_config.update_query("nonexistent", {"command": "rootsys"})

    def test_delete(self, tmp_config):
        tmp_config.delete_query("q1")
        assert tmp_config.get_query_by_id("q1") is None
        with pytest.raises(KeyError):
            tmp_config.delete_query("q1")

    def test_save_and_reload(self, tmp_config):
        tmp_config.add_query({"id": "q4", "name": "保存", "command": "wts",
                              "params": {"type": "A2", "from": "e", "to": "e", "via": "e", "weights": "0,0"}})
        tmp_config.save_queries()
        again = ConfigManager(config_dir=tmp_config.config_dir)
        again.load()
        assert [q.id for q in again._queries] == ["q1", "q2", "q3", "q4"]
        assert again.get_query_by_id("q4").params["weights"] == "0,0"

    def test_validate(self, tmp_config):
        tmp_config._queries.append(QueryConfig({"id": "q1", "command": "nope"}))
        issues = tmp_config.validate(["rootsys"])
        assert len(issues) == 1
        assert len(issues[0]["issues"]) == 2


class TestGoldens:

    def test_run_goldens(self, tmp_config):
        load_plugins()
        results = CommandManager(tmp_config).run_goldens()
        assert results == {"success": 1, "failed": 1, "skipped": 1}

    def test_repository_goldens_are_valid(self):
        load_plugins()
        cm = ConfigManager()
        cm.load()
        assert cm.get_all_queries()
        assert cm.validate(registry.get_all_names()) == []

    def test_unknown_command(self, tmp_config):
        result = CommandManager(tmp_config).run_command("nope", {})
        assert not result.success
        assert result.error["code"] == "unknown_command"

    def test_missing_required_param(self, tmp_config):
        load_plugins()
        result = CommandManager(tmp_config).run_command("wts", {"type": "A2"})
        assert result.error["code"] == "bad_params"
        assert result.exit_code == 1
