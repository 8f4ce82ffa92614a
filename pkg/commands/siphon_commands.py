"""
Siphon, trap and Commoner commands
"""
from commands.base_command import BaseCommand
from config.config import Config
from netio.export import to_payload
from petri.errors import InvalidMarking
from petri.siphons import commoner_live, maximal_trap, minimal_siphons


class TrapCommand(BaseCommand):
    """Maximal trap inside --places; answers yes when the trap is nonempty"""
    name = "trap"

    def execute(self) -> int:
        net = self.load_document().net
        result = maximal_trap(net, self.split_names(self.args.places))
        lines = [f"trap: {' '.join(sorted(result.trap)) or '(empty)'}"]
        lines += [f"layer {i}: {' '.join(sorted(layer))}" for i, layer in enumerate(result.layers, start=1)]
        return self.finish("yes" if result.trap else "no", to_payload(result), "\n".join(lines))


class SiphonsCommand(BaseCommand):
    name = "siphons"

    def execute(self) -> int:
        cap = getattr(self.args, "cap", None) or Config.SIPHON_CAP
        siphons = minimal_siphons(self.load_document().net, cap)
        text = "\n".join(" ".join(sorted(s)) for s in siphons) or "(none)"
        return self.finish("yes", {"siphons": to_payload(siphons)}, text)


class CommonerCommand(BaseCommand):
    """Liveness of the document marking via minimal siphons and maximal traps"""
    name = "commoner"

    def execute(self) -> int:
        document = self.load_document()
        if document.marking is None:
            raise InvalidMarking(f"{self.args.file} has no marking line")
        verdict = commoner_live(document.net, document.marking)
        if verdict.live:
            text = f"live ({verdict.siphons_checked} minimal siphon(s) checked)"
        else:
            text = f"not live: siphon {' '.join(sorted(verdict.siphon))} holds no marked trap"
        return self.finish("yes" if verdict.live else "no", to_payload(verdict), text)
