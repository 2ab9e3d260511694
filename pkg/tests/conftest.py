import pytest

from dworkbench import build_group
from dworkbench.descent import StructureConstants
from dworkbench.marks import build_marks_table


class Workspace:
    """Session-shared lazy cache of built groups and derived tables."""

    def __init__(self):
        self._groups = {}
        self._marks = {}
        self._sc = {}

    def group(self, name):
        if name not in self._groups:
            self._groups[name] = build_group(name)
        return self._groups[name]

    def marks(self, name):
        if name not in self._marks:
            self._marks[name] = build_marks_table(self.group(name))
        return self._marks[name]

    def sc(self, name):
        if name not in self._sc:
            self._sc[name] = StructureConstants(self.group(name))
        return self._sc[name]


@pytest.fixture(scope="session")
def ws():
    return Workspace()
