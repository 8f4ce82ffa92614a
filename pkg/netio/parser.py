"""
Line-oriented net document format

    net <name>
    places <id> <id> ...
    transitions <id> <id> ...
    arc <id> -> <id>
    marking <id>:<count> <id>:<count> ...

'#' starts a comment. places/transitions/arc lines may repeat; at most one
net and one marking line. Unlisted places hold 0 tokens.
"""
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from loguru import logger

from config.config import Config
from petri.errors import ParseError
from petri.net import IDENTIFIER, Marking, Net, NodeKind

TOKEN = re.compile(r"\S+")
COUNT = re.compile(r"[0-9]+\Z")

Location = Tuple[int, int]


@dataclass(frozen=True)
class NetDocument:
    net: Net
    marking: Optional[Marking] = None

    @property
    def name(self) -> str:
        return self.net.name


class _DocumentBuilder:
    """Collects declarations with their locations and validates them at the end"""

    def __init__(self):
        self.name: Optional[str] = None
        self.kinds: Dict[str, NodeKind] = {}
        self.places: List[str] = []
        self.transitions: List[str] = []
        self.arcs: List[Tuple[str, str, Location, Location]] = []
        self.marking: Optional[List[Tuple[str, int, Location]]] = None

    def declare(self, token: str, kind: NodeKind, where: Location) -> None:
        _identifier(token, where)
        if token in self.kinds:
            raise ParseError(*where, f"duplicate node '{token}'")
        self.kinds[token] = kind
        (self.places if kind is NodeKind.PLACE else self.transitions).append(token)

    def build(self) -> NetDocument:
        seen = set()
        arcs = []
        for source, target, source_at, target_at in self.arcs:
            for node, where in ((source, source_at), (target, target_at)):
                if node not in self.kinds:
                    raise ParseError(*where, f"unknown node '{node}'")
            if self.kinds[source] is self.kinds[target]:
                raise ParseError(*source_at, f"arc {source} -> {target} connects two {self.kinds[source].value}s")
            if (source, target) in seen:
                raise ParseError(*source_at, f"duplicate arc {source} -> {target}")
            seen.add((source, target))
            arcs.append((source, target))
        net = Net(self.places, self.transitions, arcs, name=self.name or "net")

        marking = None
        if self.marking is not None:
            counts: Dict[str, int] = {}
            for place, count, where in self.marking:
                if self.kinds.get(place) is not NodeKind.PLACE:
                    raise ParseError(*where, f"unknown place '{place}' in marking")
                if place in counts:
                    raise ParseError(*where, f"place '{place}' marked twice")
                if count > Config.MAX_TOKENS:
                    raise ParseError(*where, f"token count {count} exceeds {Config.MAX_TOKENS}")
                counts[place] = count
            marking = Marking.from_mapping(net, counts)
        return NetDocument(net, marking)


def _identifier(token: str, where: Location) -> str:
    if not IDENTIFIER.match(token):
        raise ParseError(*where, f"invalid identifier '{token}'")
    return token


def parse(text: str) -> NetDocument:
    """Parse a net document

    Raises:
        ParseError: With the 1-based line and column of the offending token
    """
    builder = _DocumentBuilder()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0]
        tokens = [(m.group(), (line_no, m.start() + 1)) for m in TOKEN.finditer(content)]
        if not tokens:
            continue
        (directive, directive_at), rest = tokens[0], tokens[1:]

        if directive == "net":
            if builder.name is not None:
                raise ParseError(*directive_at, "second 'net' line")
            if len(rest) != 1:
                raise ParseError(*directive_at, "'net' takes exactly one name")
            builder.name = _identifier(*rest[0])
        elif directive == "places":
            for token, where in rest:
                builder.declare(token, NodeKind.PLACE, where)
        elif directive == "transitions":
            for token, where in rest:
                builder.declare(token, NodeKind.TRANSITION, where)
        elif directive == "arc":
            if len(rest) != 3 or rest[1][0] != "->":
                raise ParseError(*directive_at, "expected 'arc <id> -> <id>'")
            (source, source_at), _, (target, target_at) = rest
            builder.arcs.append((_identifier(source, source_at), _identifier(target, target_at),
                                 source_at, target_at))
        elif directive == "marking":
            if builder.marking is not None:
                raise ParseError(*directive_at, "second 'marking' line")
            builder.marking = []
            for token, where in rest:
                place, sep, count = token.partition(":")
                if not sep or not COUNT.match(count):
                    raise ParseError(*where, f"expected '<place>:<count>', got '{token}'")
                builder.marking.append((_identifier(place, where), int(count), where))
        else:
            raise ParseError(*directive_at, f"unknown directive '{directive}'")

    document = builder.build()
    logger.debug(f"Parsed {document.net!r}")
    return document


def serialize(document: NetDocument) -> str:
    """Canonical text: declared node order, sorted arcs, nonzero marking entries"""
    net = document.net
    lines = [f"net {net.name}"]
    if net.places:
        lines.append("places " + " ".join(net.places))
    if net.transitions:
        lines.append("transitions " + " ".join(net.transitions))
    lines.extend(f"arc {a} -> {b}" for a, b in net.sorted_arcs())
    if document.marking is not None:
        entries = [f"{p}:{c}" for p, c in zip(document.marking.places, document.marking.tokens) if c]
        lines.append(" ".join(["marking"] + entries))
    return "\n".join(lines) + "\n"


def load(path: Union[str, Path]) -> NetDocument:
    """Read and parse a net document

    Raises:
        OSError: If the file cannot be read
        ParseError: If the bytes are not UTF-8 or the text is malformed
    """
    path = Path(path)
    logger.debug(f"Loading net document {path}")
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line = data.count(b"\n", 0, e.start) + 1
        column = e.start - (data.rfind(b"\n", 0, e.start) + 1) + 1
        raise ParseError(line, column, f"byte 0x{data[e.start]:02x} is not valid UTF-8") from None
    return parse(text)
