import threading

from lltlab.cache import HEADER, ResultCache, cache_io
from lltlab.epositivity import EExpansion
from lltlab.ring import K, q, qf
from lltlab.symfunc import e, s


def test_disabled_without_directory():
    cache = ResultCache(None)
    assert not cache.enabled
    assert cache.get("k") is None
    assert cache.put("k", e(1)) is False


def test_round_trip(cache_dir):
    cache = ResultCache(cache_dir)
    F = s(2).scale(K.one / (1 - qf)) + e(1, 1).scale(q)
    assert cache.put("llt:def:0,1", F)
    assert cache.get("llt:def:0,1") == F
    assert cache.hits == 1

    expansion = EExpansion({(2,): q, (1, 1): 1})
    cache.put("eexpand:x", expansion, "eexpansion")
    assert cache.get("eexpand:x", "eexpansion") == expansion


def test_memo_computes_once(cache_dir):
    cache = ResultCache(cache_dir)
    calls = []

    def compute():
        calls.append(1)
        return e(2)

    assert cache.memo("key", compute) == e(2)
    assert ResultCache(cache_dir).memo("key", compute) == e(2)
    assert len(calls) == 1


def test_version_mismatch_is_a_miss(cache_dir):
    cache = ResultCache(cache_dir)
    cache.put("key", e(2))
    path = cache.path_for("key")
    path.write_text(path.read_text(encoding="utf-8").replace(HEADER, "lltlab-cache v0"), encoding="utf-8")
    assert cache.get("key") is None
    assert cache.memo("key", lambda: e(1)) == e(1)
    assert cache.get("key") == e(1)


def test_corrupt_entry_is_ignored(cache_dir):
    cache = ResultCache(cache_dir)
    cache.put("key", e(2))
    cache.path_for("key").write_text(HEADER + "\n{\"key\": ", encoding="utf-8")
    assert cache.get("key") is None
    assert cache.misses == 1


def test_entry_for_another_key_is_ignored(cache_dir):
    cache = ResultCache(cache_dir)
    cache.put("a", e(2))
    cache.path_for("b").write_text(cache.path_for("a").read_text(encoding="utf-8"), encoding="utf-8")
    assert cache.get("b") is None


def test_concurrent_writers(cache_dir):
    cache = ResultCache(cache_dir)
    values = [e(2).scale(q**k) for k in range(8)]

    def write(value):
        for _ in range(10):
            cache.put("shared", value)

    threads = [threading.Thread(target=write, args=(value,)) for value in values]
    for thread in threads:
        thread.start()
    for thread in threads:
        thread.join()
    assert ResultCache(cache_dir).get("shared") in values
    assert not list(cache_dir.glob(".tmp-*"))


def test_unwritable_directory_disables(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("", encoding="utf-8")
    cache = ResultCache(blocker)
    assert not cache.enabled
    assert cache.memo("key", lambda: e(3)) == e(3)


def test_cache_io_and_clear(cache_dir):
    cache = ResultCache(cache_dir)
    assert cache_io(cache, "key") is None
    assert cache_io(cache, "key", e(1)) == e(1)
    assert cache_io(cache, "key") == e(1)
    assert cache.clear() == 1
    assert cache_io(cache, "key") is None
