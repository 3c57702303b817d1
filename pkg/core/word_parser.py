import re
from dataclasses import dataclass
from typing import List, Tuple
import logging

from core.cayley import GklParams, Vertex
from core.errors import UsageError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorWord:
    """Walk word as run-length encoded blocks of generator letters"""
    blocks: Tuple[Tuple[str, int], ...]

    LETTER_MAPPING = {
        "→": "R", "R": "R",
        "↑": "U", "U": "U",
        "←": "L", "L": "L",
        "↓": "D", "D": "D",
    }
    STEPS = {"R": (1, 0), "U": (0, 1), "L": (-1, 0), "D": (0, -1)}

    _BLOCK = re.compile(r"\[([^\]]*)\](?:\^(\d+))?")

    @classmethod
    def parse(cls, text: str) -> "GeneratorWord":
        """Parse bracket notation such as [→][↑→]^2[↑↑] or [R][UR]^2[UU]"""
        text = re.sub(r"\s+", "", text)
        blocks: List[Tuple[str, int]] = []
        pos = 0
        while pos < len(text):
            match = cls._BLOCK.match(text, pos)
            if not match:
                raise UsageError(f"Cannot parse walk word at position {pos}: {text[pos:]!r}")
            letters = ""
            for char in match.group(1):
                if char not in cls.LETTER_MAPPING:
                    raise UsageError(f"Unknown generator {char!r} in walk word")
                letters += cls.LETTER_MAPPING[char]
            exponent = int(match.group(2)) if match.group(2) else 1
            blocks.append((letters, exponent))
            pos = match.end()
        return cls(tuple(blocks))

    @classmethod
    def from_letters(cls, letters: str) -> "GeneratorWord":
        return cls(((letters, 1),)) if letters else cls(())

    def expand(self) -> str:
        return "".join(letters * exponent for letters, exponent in self.blocks)

    def evaluate(self) -> Tuple[int, int]:
        """Group element the word sums to, as an uncanonicalized pair"""
        dm = dn = 0
        for letter in self.expand():
            step = self.STEPS[letter]
            dm += step[0]
            dn += step[1]
        return dm, dn

    def apply(self, params: GklParams, start: Vertex) -> List[Vertex]:
        """Vertex sequence of the walk from start"""
        walk = [params.canonicalize(*start)]
        for letter in self.expand():
            dm, dn = self.STEPS[letter]
            current = walk[-1]
            walk.append(params.canonicalize(current.m + dm, current.n + dn))
        logger.debug(f"Walk of length {len(walk) - 1} in {params} ends at {tuple(walk[-1])}")
        return walk

    def __str__(self) -> str:
        return "".join(f"[{letters}]" + (f"^{exponent}" if exponent != 1 else "")
                       for letters, exponent in self.blocks)


def apply_word(params: GklParams, start: Vertex, word: GeneratorWord) -> List[Vertex]:
    return word.apply(params, start)
