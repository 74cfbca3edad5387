"""
Relative understandability labels
"""

from enum import Enum
from typing import Optional

from ..errors import ClassifierError


class Label(str, Enum):
    """
    Understandability of a decompiled file relative to its original

    LESS: significantly less understandable than the original
    EQUI: comparable
    MORE: significantly more understandable
    """
    LESS = "Less"
    EQUI = "Equi"
    MORE = "More"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "Label":
        """Case-insensitive lookup of `Less`, `Equi` or `More`"""
        cleaned = (text or "").strip().lower()
        for label in cls:
            if label.value.lower() == cleaned:
                return label
        raise ClassifierError(f"unknown label {text!r}; expected Less, Equi or More")

    @classmethod
    def parse_optional(cls, text: Optional[str]) -> Optional["Label"]:
        if text is None or not str(text).strip():
            return None
        return cls.parse(str(text))


# Row/column order of every confusion matrix
LABEL_ORDER = (Label.LESS, Label.EQUI, Label.MORE)
