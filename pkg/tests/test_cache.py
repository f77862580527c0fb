import json

from jalpha import cache
from jalpha.engine import JTable
from jalpha.rootsys import RootSystemSpec


def test_roundtrip_and_bit_exact(tmp_path):
    s = RootSystemSpec.parse("B2")
    t = JTable(s)
    t.fill((2, 2))
    path = cache.save(t, tmp_path)
    assert path.name == "B2.json"
    first = path.read_bytes()
    data = json.loads(first)
    assert data["family"] == "B" and data["rank"] == 2 and len(data["entries"]) == 9
    assert all(isinstance(x, str) for e in data["entries"] for x in e["num"] + e["den"])

    loaded = JTable(s)
    assert cache.load_into(loaded, tmp_path) == 8  # alpha = 0 is always present
    assert loaded.entries == t.entries

    path.unlink()
    fresh = JTable(s)
    fresh.fill((2, 2))
    cache.save(fresh, tmp_path)
    assert path.read_bytes() == first
    assert cache.verify(tmp_path, s) == []


def test_save_merges_with_existing(tmp_path):
    s = RootSystemSpec.parse("A2")
    a = JTable(s)
    a.fill((2, 0))
    cache.save(a, tmp_path)
    b = JTable(s)
    b.fill((0, 2))
    cache.save(b, tmp_path)
    data = json.loads(cache.cache_path(tmp_path, s).read_text())
    assert len(data["entries"]) == 5


def test_bad_cache_is_ignored(tmp_path):
    s = RootSystemSpec.parse("A2")
    path = cache.cache_path(tmp_path, s)
    path.write_text("{not json")
    assert cache.load_into(JTable(s), tmp_path) == 0
    path.write_text(json.dumps({"family": "A", "rank": 3, "entries": []}))
    assert cache.load_into(JTable(s), tmp_path) == 0
    assert cache.load_into(JTable(s), tmp_path / "missing") == 0


def test_verify_flags_tampering(tmp_path):
    s = RootSystemSpec.parse("A2")
    t = JTable(s)
    t.fill((1, 1))
    path = cache.save(t, tmp_path)
    data = json.loads(path.read_text())
    data["entries"][-1]["num"] = ["1", "2"]
    path.write_text(json.dumps(data))
    assert cache.verify(tmp_path, s) == [(1, 1)]


def test_env_default(monkeypatch, tmp_path):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    assert cache.default_cache_dir() == tmp_path
    monkeypatch.delenv(cache.ENV_VAR)
    assert cache.default_cache_dir() is None
