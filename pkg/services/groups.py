"""Resolve a ``--group`` token into parse/format/multiply operations on its elements."""

from typing import Any, Optional

from core.errors import ParseError
from models.seifert import SeifertData
from models.words import PSL2Z, Word
from services import braid3
from services.extensions import CentralExtension
from services.seifert import SeifertGroup, parse_seifert
from services.words import parse_word


class GroupAdapter:
    token = ""

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def format(self, x: Any) -> str:
        return str(x)

    def multiply(self, *items: Any) -> Any:
        raise NotImplementedError

    def invert(self, x: Any) -> Any:
        raise NotImplementedError

    def is_identity(self, x: Any) -> bool:
        return x.is_identity

    def conjugate(self, x: Any, k: Any) -> Any:
        """k·x·k⁻¹."""
        return self.multiply(k, x, self.invert(k))


class ModularGroup(GroupAdapter):
    token = "pslz"

    def parse(self, text: str) -> Word:
        return parse_word(text, PSL2Z)

    def multiply(self, *items: Word) -> Word:
        acc = Word.identity(PSL2Z)
        for x in items:
            acc = acc * x
        return acc

    def invert(self, x: Word) -> Word:
        return ~x


class ExtensionGroup(GroupAdapter):
    def __init__(self, extension: CentralExtension):
        self.extension = extension

    def multiply(self, *items):
        return self.extension.multiply(*items) if items else self.extension.identity()

    def invert(self, x):
        return self.extension.invert(x)


class BraidGroup3(ExtensionGroup):
    token = "b3"

    def __init__(self):
        super().__init__(braid3.B3)

    def parse(self, text: str):
        return braid3.normal_form(braid3.parse_braid(text))

    def format(self, x) -> str:
        return str(braid3.to_braid(x))


class SeifertFiberedGroup(ExtensionGroup):
    def __init__(self, data: SeifertData):
        self.data = data
        self.group = SeifertGroup(data)
        super().__init__(self.group.extension)
        self.token = f"seifert:{data}"

    def parse(self, text: str):
        return self.group.parse(text)


def seifert_data(token: str) -> Optional[SeifertData]:
    if token.startswith("seifert:"):
        return parse_seifert(token[len("seifert:"):])
    return None


def resolve_group(token: str) -> GroupAdapter:
    token = token.strip()
    if token == "pslz":
        return ModularGroup()
    if token == "b3":
        return BraidGroup3()
    data = seifert_data(token)
    if data is not None:
        return SeifertFiberedGroup(data)
    raise ParseError(f"unknown group {token!r}; expected pslz, b3 or seifert:<spec>", 0)
