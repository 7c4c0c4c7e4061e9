import pytest

from frobnil.exceptions import UnknownAlgebra
from frobnil.repositories.files import FileAlgebraRepository
from frobnil.repositories.memory import BuiltinAlgebraRepository

CYCLIC = """frobnil-algebra v1
name = {name}
unit = 1

[basis]
1 even
g even

[trace]
1 = 1

[mult]
g*g = 1
"""


class TestBuiltinRepository:
    """Built-in algebras by name."""

    def test_listed_names(self):
        """Cyclic groups of small order are listed."""
        names = BuiltinAlgebraRepository().get_names()
        assert "clifford_odd" in names
        assert "cyclic_group(3)" in names
        assert "cyclic_group" not in names

    def test_unlisted_cyclic_group_resolves(self):
        """Any order resolves even when it is not listed."""
        assert BuiltinAlgebraRepository().get_by_name("cyclic_group(5)").dim == 5

    def test_get_all(self):
        """Every listed name builds."""
        repository = BuiltinAlgebraRepository()
        assert [A.name for A in repository.get_all()] == repository.get_names()

    def test_unknown_name(self):
        with pytest.raises(UnknownAlgebra):
            BuiltinAlgebraRepository().get_by_name("octonions")


class TestFileRepository:
    """Configs in a directory on top of the built-ins."""

    def test_loads_configs(self, tmp_path):
        """A config file adds its declared name."""
        (tmp_path / "z2.alg").write_text(CYCLIC.format(name="z2"))
        repository = FileAlgebraRepository(str(tmp_path))
        assert "z2" in repository.get_names()
        assert repository.get_by_name("z2").dim == 2
        assert repository.get_by_name("ground").dim == 1

    def test_skips_invalid_and_taken_names(self, tmp_path):
        """Broken files and clashing names are skipped."""
        (tmp_path / "broken.alg").write_text("not a config\n")
        (tmp_path / "clash.alg").write_text(CYCLIC.format(name="ground"))
        repository = FileAlgebraRepository(str(tmp_path))
        assert repository.get_names() == BuiltinAlgebraRepository().get_names()
        assert repository.get_by_name("ground").name == "ground"

    def test_missing_directory(self, tmp_path):
        """Only the built-ins are available."""
        repository = FileAlgebraRepository(str(tmp_path / "absent"))
        assert repository.get_names() == BuiltinAlgebraRepository().get_names()

    def test_reload_picks_up_new_files(self, tmp_path):
        """Files added after the first lookup appear after reload()."""
        repository = FileAlgebraRepository(str(tmp_path))
        assert "z2" not in repository.get_names()
        (tmp_path / "z2.alg").write_text(CYCLIC.format(name="z2"))
        repository.reload()
        assert "z2" in repository.get_names()

    def test_unknown_name(self, tmp_path):
        with pytest.raises(UnknownAlgebra):
            FileAlgebraRepository(str(tmp_path)).get_by_name("z7")
