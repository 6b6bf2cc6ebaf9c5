from collections.abc import Mapping
from typing import Any, Self

import msgspec

from lbentropy.app.common.tools import convert_from, convert_to, msgspec_decoder, msgspec_encoder
from lbentropy.app.contracts import exceptions as exc


class BaseDTO(msgspec.Struct):
    @classmethod
    def from_mapping(cls, value: Mapping[str, Any]) -> Self:
        try:
            return convert_to(cls, value, strict=False)
        except msgspec.ValidationError as e:
            raise exc.ValidationError(str(e), code=cls.__name__) from e

    @classmethod
    def from_string(cls, value: str) -> Self:
        try:
            return cls.from_mapping(msgspec_decoder(value, strict=False))
        except msgspec.DecodeError as e:
            raise exc.ParseError(str(e), code=cls.__name__) from e

    def as_mapping(self) -> dict[str, Any]:
        return dict(convert_from(self))

    def as_string(self, *, canonical: bool = False) -> str:
        """JSON text; ``canonical`` sorts keys so equal configs encode to equal text."""
        return msgspec_encoder(self, order="sorted" if canonical else None)


class ConfigDTO(BaseDTO, forbid_unknown_fields=True): ...


class ReportDTO(BaseDTO): ...
