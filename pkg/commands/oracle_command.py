"""
Reachability oracle command
"""
from typing import Dict, List

from commands.base_command import BaseCommand
from config.config import Config
from netio.export import to_payload
from oracle.reachability import (
    Outcome,
    TransitionStatus,
    Verdict,
    explore,
    liveness,
    oracle_well_formed,
)
from petri.net import Marking


class OracleCommand(BaseCommand):
    """Explore the document marking (all-ones when absent)

    --bounded and --live check the explored marking, --wf the net; with no
    flag both --bounded and --live apply. The answer is yes only if every
    requested check says yes, inconclusive if any hit the state cap.
    """
    name = "oracle"

    def execute(self) -> int:
        document = self.load_document()
        net = document.net
        cap = getattr(self.args, "max_states", None) or Config.STATE_CAP
        check_bounded = self.args.bounded or not (self.args.live or self.args.wf)
        check_live = self.args.live or not (self.args.bounded or self.args.wf)

        answers: List[str] = []
        payload: Dict = {}
        lines: List[str] = []
        if check_bounded or check_live:
            m0 = document.marking if document.marking is not None else Marking.ones(net)
            verdict = explore(net, m0, cap)
            payload["exploration"] = to_payload(verdict)
            lines.append(f"exploration from {m0}: {verdict.outcome.value}, {len(verdict.graph.states)} state(s)")
            if verdict.outcome is Outcome.UNBOUNDED:
                lines.append(f"pump: {' '.join(verdict.pump)} after {' '.join(verdict.path[:verdict.dominated_index])}")
            if check_bounded:
                answers.append({Outcome.BOUNDED: "yes", Outcome.UNBOUNDED: "no"}.get(verdict.outcome, "inconclusive"))
            if check_live:
                if verdict.outcome is Outcome.BOUNDED:
                    statuses = liveness(net, verdict.graph)
                    payload["liveness"] = to_payload(statuses)
                    lines += [f"{t}: {statuses[t].value}" for t in sorted(statuses)]
                    answers.append("yes" if all(s is TransitionStatus.LIVE for s in statuses.values()) else "no")
                else:
                    answers.append("inconclusive")
        if self.args.wf:
            wf = oracle_well_formed(net, cap, exhaustive=getattr(self.args, "exhaustive", False))
            payload["well_formed"] = wf.value
            lines.append(f"well-formed: {wf.value}")
            answers.append(wf.value)

        if "no" in answers:
            answer = Verdict.NO.value
        elif "inconclusive" in answers:
            answer = Verdict.INCONCLUSIVE.value
        else:
            answer = Verdict.YES.value
        return self.finish(answer, payload, "\n".join(lines + [f"answer: {answer}"]))
