"""
Commands that inspect or transform the net structure
"""
from commands.base_command import BaseCommand
from netio.export import to_dot, to_payload
from netio.parser import NetDocument, serialize
from petri.free_choice import clusters, is_free_choice
from petri.net import reverse_dual


class CheckFreeChoiceCommand(BaseCommand):
    name = "check-fc"

    def execute(self) -> int:
        net = self.load_document().net
        free_choice = is_free_choice(net)
        answer = "yes" if free_choice else "no"
        return self.finish(answer, {"free_choice": free_choice}, f"free-choice: {answer}")


class ClustersCommand(BaseCommand):
    name = "clusters"

    def execute(self) -> int:
        partition = clusters(self.load_document().net)
        lines = [f"C{i}: {' '.join(sorted(block))}" for i, block in enumerate(partition.clusters, start=1)]
        return self.finish("yes", {"clusters": to_payload(partition)}, "\n".join(lines))


class ReverseDualCommand(BaseCommand):
    """Print the reverse-dual document; the marking does not carry over"""
    name = "rd"

    def execute(self) -> int:
        dual = NetDocument(reverse_dual(self.load_document().net))
        return self.finish("yes", {"document": to_payload(dual)}, serialize(dual))


class DotCommand(BaseCommand):
    name = "dot"

    def execute(self) -> int:
        document = self.load_document()
        highlight = self.split_names(getattr(self.args, "highlight", None))
        for node in highlight:
            document.net.kind(node)
        text = to_dot(document, highlight)
        return self.finish("yes", {"dot": text}, text)
