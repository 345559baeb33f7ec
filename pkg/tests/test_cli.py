"""CLI surface: flags, exit codes, and stdout contracts."""

import json

import pytest

from conftest import FIXTURES

WORDNET = FIXTURES / "wordnet_mini"
VECTORS = FIXTURES / "vectors_toy.txt"
RAILWAY_RS = FIXTURES / "railway_rs.txt"


def keyword_rows(stdout: bytes) -> list[list[str]]:
    """Rows of the keyword table (for `mine`, only its first section)."""
    rows = []
    seen_header = False
    for line in stdout.decode().splitlines():
        if line.startswith("#"):
            if seen_header:
                break
            seen_header = True
            continue
        if line:
            rows.append(line.split("\t"))
    return rows


class TestHelp:
    @pytest.mark.parametrize("command,flags,has_defaults", [
        ([], [], False),
        (["mine"], ["--input", "--out", "--top-k", "--depth", "--wordnet",
                    "--background", "--offline", "--cache", "--max-articles",
                    "--endpoint", "--user-agent", "--workers"], True),
        (["keywords"], ["--input", "--top-k", "--wordnet", "--background"],
         True),
        (["eval"], ["--corpus", "--input", "--vectors", "--out"], False),
        (["report"], ["--corpus", "--top-n", "--wordnet"], True),
    ])
    def test_help_lists_flags_with_defaults(self, cli, command, flags,
                                            has_defaults):
        proc = cli(*command, "--help")
        assert proc.returncode == 0
        text = proc.stdout.decode()
        for flag in flags:
            assert flag in text, f"{flag} missing from {command} --help"
        if has_defaults:
            assert "default" in text.lower()

    def test_commands_listed(self, cli):
        text = cli("--help").stdout.decode()
        for cmd in ("mine", "keywords", "eval", "report"):
            assert cmd in text


class TestKeywordsCommand:
    def test_empty_rs_empty_table(self, cli, tmp_path):
        empty = tmp_path / "empty.txt"
        empty.write_text("")
        proc = cli("keywords", "--input", empty, "--wordnet", WORDNET)
        assert proc.returncode == 0
        assert proc.stdout == b""

    def test_top_k_cardinality(self, cli):
        proc = cli("keywords", "--input", RAILWAY_RS, "--wordnet", WORDNET,
                   "--top-k", "5", check=True)
        assert len(keyword_rows(proc.stdout)) == 5

    def test_rerun_byte_identical(self, cli):
        a = cli("keywords", "--input", RAILWAY_RS, "--wordnet", WORDNET,
                check=True)
        b = cli("keywords", "--input", RAILWAY_RS, "--wordnet", WORDNET,
                check=True)
        assert a.stdout == b.stdout

    def test_missing_wordnet_dir_exit_2(self, cli, tmp_path):
        proc = cli("keywords", "--input", RAILWAY_RS,
                   "--wordnet", tmp_path / "nowhere")
        assert proc.returncode == 2
        assert b"--wordnet" in proc.stderr

    def test_wordnet_dir_without_indexes_exit_2(self, cli, tmp_path):
        empty = tmp_path / "wn"
        empty.mkdir()
        proc = cli("keywords", "--input", RAILWAY_RS, "--wordnet", empty)
        assert proc.returncode == 2
        assert b"--wordnet" in proc.stderr

    def test_background_docs_change_scores(self, cli, tmp_path):
        bg = tmp_path / "bg.txt"
        bg.write_text("The emergency brake shall function.\n")
        plain = cli("keywords", "--input", RAILWAY_RS, "--wordnet", WORDNET,
                    check=True)
        with_bg = cli("keywords", "--input", RAILWAY_RS, "--wordnet", WORDNET,
                      "--background", bg, check=True)
        assert plain.stdout != with_bg.stdout


class TestMineCommand:
    def test_offline_depth1_counts_and_keywords(self, cli, railway_mined,
                                                tmp_path, recorded):
        out = tmp_path / "corpus"
        proc = cli("mine", "--input", RAILWAY_RS, "--out", out,
                   "--wordnet", WORDNET, "--offline",
                   "--cache", railway_mined.cache, check=True)
        stdout = proc.stdout.decode()
        assert f"# articles: {recorded['railway']['depth1_article_count']}" \
            in stdout
        assert "# seed matches: 15" in stdout
        phrases = [row[0] for row in keyword_rows(proc.stdout)]
        assert len(phrases) == 50
        assert sum(1 for p in phrases if " " in p) >= 25  # multi-word NPs
        for required in recorded["railway"]["required_keywords"]:
            assert required in phrases
        manifest = json.loads((out / "manifest.json").read_text())
        assert len(manifest["articles"]) == \
            recorded["railway"]["depth1_article_count"]
        assert (out / "keywords.tsv").is_file()

    def test_offline_depth0_seed_matches_only(self, cli, railway_mined,
                                              tmp_path, recorded):
        out = tmp_path / "corpus0"
        proc = cli("mine", "--input", RAILWAY_RS, "--out", out,
                   "--wordnet", WORDNET, "--offline", "--depth", "0",
                   "--cache", railway_mined.cache, check=True)
        assert f"# articles: {recorded['railway']['seed_count']}" \
            in proc.stdout.decode()
        manifest = json.loads((out / "manifest.json").read_text())
        assert [e["page_id"] for e in manifest["articles"]] == \
            recorded["railway"]["seed_page_ids"]

    def test_offline_cold_cache_fails(self, cli, tmp_path):
        proc = cli("mine", "--input", RAILWAY_RS, "--out", tmp_path / "o",
                   "--wordnet", WORDNET, "--offline",
                   "--cache", tmp_path / "empty-cache")
        assert proc.returncode == 1
        assert b"offline" in proc.stderr.lower()

    def test_missing_wordnet_exit_2(self, cli, tmp_path):
        proc = cli("mine", "--input", RAILWAY_RS, "--out", tmp_path / "o",
                   "--wordnet", tmp_path / "missing")
        assert proc.returncode == 2
        assert b"--wordnet" in proc.stderr

    def test_max_articles_truncation(self, cli, railway_mined, tmp_path):
        out = tmp_path / "capped"
        proc = cli("mine", "--input", RAILWAY_RS, "--out", out,
                   "--wordnet", WORDNET, "--offline",
                   "--cache", railway_mined.cache,
                   "--max-articles", "100", check=True)
        stdout = proc.stdout.decode()
        assert "# articles: 100" in stdout
        assert "# frontier truncated" in stdout

    def test_writes_only_under_out_and_cache(self, cli, railway_mined,
                                             tmp_path):
        out = tmp_path / "sandbox" / "corpus"
        before = set(tmp_path.iterdir())
        cli("mine", "--input", RAILWAY_RS, "--out", out,
            "--wordnet", WORDNET, "--offline",
            "--cache", railway_mined.cache, check=True)
        assert set(tmp_path.iterdir()) == before | {tmp_path / "sandbox"}
        assert sorted(p.name for p in out.iterdir()) == \
            ["articles", "keywords.tsv", "manifest.json"]

    def test_endpoint_changes_cache_identity(self, cli, railway_mined,
                                             tmp_path):
        # cache keys include the endpoint, so another endpoint cannot be
        # served from this cache in offline mode
        proc = cli("mine", "--input", RAILWAY_RS, "--out", tmp_path / "o",
                   "--wordnet", WORDNET, "--offline",
                   "--cache", railway_mined.cache,
                   "--endpoint", "https://example.org/w/api.php")
        assert proc.returncode == 1
        assert b"offline" in proc.stderr.lower()


class TestEvalCommand:
    def test_missing_vectors_exit_2(self, cli, railway_mined, tmp_path):
        proc = cli("eval", "--corpus", railway_mined.corpus,
                   "--input", FIXTURES / "railway_test_rs.txt",
                   "--vectors", tmp_path / "none.txt")
        assert proc.returncode == 2

    def test_corpus_without_manifest_exit_1(self, cli, tmp_path):
        (tmp_path / "c").mkdir()
        proc = cli("eval", "--corpus", tmp_path / "c",
                   "--input", FIXTURES / "railway_test_rs.txt",
                   "--vectors", VECTORS)
        assert proc.returncode == 1

    def test_railway_corpus_vs_test_rs(self, cli, railway_mined, recorded):
        proc = cli("eval", "--corpus", railway_mined.corpus,
                   "--input", FIXTURES / "railway_test_rs.txt",
                   "--vectors", VECTORS, check=True)
        payload = json.loads(proc.stdout)
        want = recorded["railway"]["eval"]
        for key in ("min", "avg", "max", "oov_rate"):
            assert payload[key] == pytest.approx(want[key], abs=1e-9)
        assert len(payload["per_article"]) == 686

    def test_corpus_vs_its_own_seed_rs(self, cli, railway_mined, recorded):
        # the seed RS embeds onto the same axis as the corpus domain words,
        # so the aggregate sits near the maximum
        proc = cli("eval", "--corpus", railway_mined.corpus,
                   "--input", RAILWAY_RS, "--vectors", VECTORS, check=True)
        payload = json.loads(proc.stdout)
        assert payload["avg"] == pytest.approx(
            recorded["railway"]["eval"]["avg"], abs=1e-9)
        assert payload["avg"] >= 0.9 * payload["max"]

    def test_out_file(self, cli, railway_mined, tmp_path):
        report = tmp_path / "report.json"
        proc = cli("eval", "--corpus", railway_mined.corpus,
                   "--input", FIXTURES / "railway_test_rs.txt",
                   "--vectors", VECTORS, "--out", report, check=True)
        payload = json.loads(report.read_text())
        assert "per_article" in payload
        assert b"min=" in proc.stdout  # human summary on stdout

    def test_summary_on_stderr_when_json_on_stdout(self, cli, railway_mined):
        proc = cli("eval", "--corpus", railway_mined.corpus,
                   "--input", FIXTURES / "railway_test_rs.txt",
                   "--vectors", VECTORS, check=True)
        assert b"min=" in proc.stderr
        json.loads(proc.stdout)  # stdout stays pure JSON


class TestReportCommand:
    def test_rail_in_top_five(self, cli, railway_mined):
        proc = cli("report", "--corpus", railway_mined.corpus,
                   "--top-n", "5", "--wordnet", WORDNET, check=True)
        terms = [line.split("\t")[0]
                 for line in proc.stdout.decode().splitlines()]
        assert "rail" in terms
        assert len(terms) == 5

    def test_top_terms_match_recorded(self, cli, railway_mined, recorded):
        proc = cli("report", "--corpus", railway_mined.corpus,
                   "--top-n", "5", "--wordnet", WORDNET, check=True)
        terms = [line.split("\t")[0]
                 for line in proc.stdout.decode().splitlines()]
        assert terms == recorded["railway"]["top_terms"]

    def test_top_n_zero_exit_2(self, cli, railway_mined):
        proc = cli("report", "--corpus", railway_mined.corpus, "--top-n", "0")
        assert proc.returncode == 2

    def test_rerun_identical(self, cli, railway_mined):
        a = cli("report", "--corpus", railway_mined.corpus, check=True)
        b = cli("report", "--corpus", railway_mined.corpus, check=True)
        assert a.stdout == b.stdout

    def test_transport_fixture(self, cli, fixtures_dir, recorded):
        proc = cli("report", "--corpus", fixtures_dir / "transport_corpus",
                   "--top-n", "4", "--wordnet", WORDNET, check=True)
        terms = [line.split("\t")[0]
                 for line in proc.stdout.decode().splitlines()]
        assert terms == recorded["transportation"]["top_terms"]
