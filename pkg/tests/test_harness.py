import json
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from embtrees.campaign import CampaignConfig, parse_config, run_campaign
from embtrees.cli import main
from embtrees.errors import ConfigParse
from embtrees.serialize import SeriesCache, cache_key, export_series, import_series
from embtrees.series import Series

series_strategy = st.lists(
    st.fractions(min_value=-99, max_value=99, max_denominator=50),
    min_size=1,
    max_size=14,
).map(Series)


@settings(max_examples=100, deadline=None)
@given(series_strategy)
def test_export_import_roundtrip(series):
    for fmt in ("json", "csv"):
        assert import_series(export_series(series, fmt), fmt) == series


def test_export_json_shape():
    payload = json.loads(export_series(Series([1, 1, 2, 5, 14], 5), "json"))
    assert payload == {"order": 5, "coeffs": ["1", "1", "2", "5", "14"]}
    mixed = json.loads(export_series(Series([Q(1, 2), 3], 2), "json"))
    assert mixed["coeffs"] == ["1/2", "3"]


def test_export_csv_shape():
    text = export_series(Series([Q(1, 2), 3], 2), "csv")
    assert text.splitlines() == ["n,numerator,denominator", "0,1,2", "1,3,1"]


def test_cache_roundtrip_and_miss(tmp_path):
    cache = SeriesCache(tmp_path)
    key = cache_key("paths", "-1:1,1:1", 0, 12)
    assert cache.get(key) is None  # cold cache is a miss, not an error
    series = Series([1, 1, 2, 3, 6], 5)
    cache.put(key, series)
    assert cache.get(key) == series
    assert cache.get(cache_key("other")) is None


def test_cache_keys_are_canonical():
    assert cache_key("a", 1, Q(1, 2)) == cache_key("a", 1, Q(1, 2))
    assert cache_key("a", 1) != cache_key("a", 2)


def test_parse_config():
    cfg = parse_config("# comment\nsuites = walkers, paths\norder=22\njobs = 3\n")
    assert cfg.suites == ("walkers", "paths")
    assert cfg.order == 22 and cfg.jobs == 3
    assert parse_config("").suites is None


def test_parse_config_errors():
    with pytest.raises(ConfigParse) as info:
        parse_config("order twenty\n")
    assert info.value.line == 1
    with pytest.raises(ConfigParse) as info:
        parse_config("order=twenty\n")
    assert info.value.field == "order"
    with pytest.raises(ConfigParse):
        parse_config("colour=blue\n")


def test_campaign_suite_filter_runs_only_requested():
    report = run_campaign(CampaignConfig(suites=("exact-arith",), order=20))
    assert report.results
    assert all(r.id.startswith("exact-arith/") for r in report.results)
    assert report.ok


def test_campaign_conjecture_status_policy():
    report = run_campaign(CampaignConfig(suites=("binary/conjectured-form",), order=20))
    statuses = {r.id: r.status for r in report.results}
    assert statuses == {"binary/conjectured-form": "conjecture-consistent"}
    assert report.ok  # conjecture-consistent does not fail the campaign


def test_campaign_determinism_across_parallelism():
    one = run_campaign(CampaignConfig(suites=("exact-arith", "kernel"), order=20, jobs=1))
    four = run_campaign(CampaignConfig(suites=("exact-arith", "kernel"), order=20, jobs=4))
    assert one.comparable() == four.comparable()


class TestCli:
    def test_trees(self, capsys):
        assert main(["trees", "--w1", "1", "--order", "7"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["coeffs"] == ["1", "1", "2", "5", "14", "42", "132"]

    def test_trees_closed_matches_recurrence(self, capsys):
        main(["trees", "--w2", "1", "--w3", "1", "--level", "1", "--boundary", "zero",
              "--order", "8"])
        rec = json.loads(capsys.readouterr().out)
        main(["trees", "--w2", "1", "--w3", "1", "--level", "1", "--boundary", "zero",
              "--order", "8", "--method", "closed"])
        clo = json.loads(capsys.readouterr().out)
        assert rec == clo

    def test_dary(self, capsys):
        main(["dary", "--kind", "odd", "--d", "1", "--level", "0", "--order", "6"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["coeffs"] == ["1", "1", "2", "6", "22", "91"]

    def test_paths_excursions_csv(self, capsys):
        main(["paths", "--steps=-1:1,1:1", "--excursions", "--order", "5",
              "--format", "csv"])
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "n,numerator,denominator"
        assert lines[1:] == ["0,1,1", "1,0,1", "2,1,1", "3,0,1", "4,2,1"]

    def test_paths_endpoint_rows(self, capsys):
        main(["paths", "--steps=-1:1,1:1", "--mark-endpoint", "--order", "4"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["rows"]["0"] == ["1", "0", "1", "0"]
        assert payload["rows"]["2"] == ["0", "0", "1", "0"]

    def test_walkers_closed_and_oracle_agree(self, capsys):
        main(["walkers", "--boundary", "updown", "--i", "1", "--j", "0",
              "--order", "8"])
        closed = json.loads(capsys.readouterr().out)
        main(["walkers", "--boundary", "updown", "--i", "1", "--j", "0",
              "--order", "8", "--oracle"])
        oracle = json.loads(capsys.readouterr().out)
        assert closed["coeffs"] == oracle["coeffs"]

    def test_oeis_match_via_stdin(self, capsys, monkeypatch):
        import io
        text = export_series(Series([1, 2, 6, 22, 90, 394, 1806, 8558, 41586], 9), "json")
        monkeypatch.setattr("sys.stdin", io.StringIO(text))
        main(["oeis", "--match", "-"])
        payload = json.loads(capsys.readouterr().out)
        assert payload["matches"] == ["A006318"]

    def test_oeis_fetch_bundled(self, capsys):
        main(["oeis", "--fetch", "A000108"])
        out = capsys.readouterr().out
        assert out.startswith("# A000108\n0 1\n1 1\n2 2\n")

    def test_verify_exit_status(self, capsys):
        assert main(["verify", "--suite", "exact-arith"]) == 0
        out = capsys.readouterr().out
        assert "PASS" in out

    def test_env_order_override(self, capsys, monkeypatch):
        monkeypatch.setenv("EMBTREES_ORDER", "4")
        main(["trees", "--w1", "1"])
        assert json.loads(capsys.readouterr().out)["order"] == 4
        # explicit flag wins over the environment
        main(["trees", "--w1", "1", "--order", "6"])
        assert json.loads(capsys.readouterr().out)["order"] == 6

    def test_cache_dir_flag(self, capsys, tmp_path):
        argv = ["dary", "--kind", "even", "--d", "1", "--level", "1",
                "--order", "8", "--cache-dir", str(tmp_path)]
        main(argv)
        first = capsys.readouterr().out
        assert list(tmp_path.glob("*.json"))  # cache populated
        main(argv)
        assert capsys.readouterr().out == first


def test_cli_verify_with_config_file(tmp_path, capsys):
    cfg = tmp_path / "campaign.cfg"
    cfg.write_text("suites = exact-arith\norder = 18\njobs = 2\n")
    assert main(["verify", "--config", str(cfg)]) == 0
    out = capsys.readouterr().out
    assert "exact-arith/ring-laws" in out and "PASS" in out
    # CLI flags override the file
    assert main(["verify", "--config", str(cfg), "--suite", "kernel"]) == 0
    out = capsys.readouterr().out
    assert "kernel/fuss-catalan" in out and "exact-arith" not in out
