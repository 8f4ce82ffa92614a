"""
Well-formedness and cover commands
"""
from commands.base_command import BaseCommand
from netio.export import to_payload
from petri.components import semi_s_cover, semi_t_cover
from petri.wellformed import StructuralRefusal, decide_well_formed


class WellFormedCommand(BaseCommand):
    name = "wf"

    def execute(self) -> int:
        verdict = decide_well_formed(self.load_document().net)
        payload = to_payload(verdict)
        if isinstance(verdict, StructuralRefusal):
            text = (f"no: bottom SCC {' '.join(sorted(verdict.bottom))} "
                    f"is fed by {' '.join(sorted(verdict.upstream))}")
        elif verdict.is_yes:
            text = "\n".join(["yes"] + [f"cover: {self.describe(c)}" for c in verdict.t_cover])
        else:
            text = f"no\nwitness: {self.describe(verdict.witness)}"
        return self.finish(verdict.answer.value, payload, text)


class _CoverCommand(BaseCommand):
    """Semi-component cover; answers yes when every member is full"""

    def cover(self, net):
        raise NotImplementedError

    def execute(self) -> int:
        members = self.cover(self.load_document().net)
        answer = "yes" if all(c.kind.is_full for c in members) else "no"
        text = "\n".join(self.describe(c) for c in members)
        return self.finish(answer, {"cover": [to_payload(c) for c in members]}, text)


class TCoverCommand(_CoverCommand):
    name = "tcover"

    def cover(self, net):
        return semi_t_cover(net)


class SCoverCommand(_CoverCommand):
    name = "scover"

    def cover(self, net):
        return semi_s_cover(net)
