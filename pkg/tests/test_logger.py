# -*- coding: utf-8 -*-
"""logger 単体テスト"""
from infra.logger import Logger


class TestLogger:

    def test_writes_to_stderr_only(self, capsys):
        log = Logger()
        log.info("開始")
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "[INFO] 開始" in captured.err

    def test_threshold(self, capsys):
        log = Logger()
        log.configure(level="WARNING")
        log.info("表示されない")
        log.warning("表示される")
        err = capsys.readouterr().err
        assert "表示されない" not in err
        assert "[WARNING] 表示される" in err

    def test_unknown_level_falls_back(self):
        log = Logger()
        log.configure(level="verbose")
        assert log.threshold == 20

    def test_debug(self, capsys):
        log = Logger()
        log.debug("隠れる")
        log.configure(level="DEBUG")
        log.debug("見える")
        err = capsys.readouterr().err
        assert "隠れる" not in err and "見える" in err

    def test_file_and_rotate(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setattr("infra.logger.get_log_folder", lambda: tmp_path)
        (tmp_path / "log_20000101.txt").write_text("old", encoding="utf-8")
        log = Logger()
        log.configure(to_file=True, retention_days=7)
        log.info("記録")
        assert "[INFO] 記録" in log.log_file.read_text(encoding="utf-8")
        assert log.rotate_logs() == 1
        assert [f.name for f in tmp_path.glob("log_*.txt")] == [log.log_file.name]

    def test_skip_level(self, capsys):
        log = Logger()
        log.skip("飛ばす")
        assert "[SKIP] 飛ばす" in capsys.readouterr().err
