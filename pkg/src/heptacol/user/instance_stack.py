from ..InstanceParser.parser import Instance


class InstanceStack:
    """
    InstanceStack: class to keep the instances and outcomes of the current notebook

    attributes:
        stack: dict name -> Instance
        outcomes: dict name -> last Outcome
    """

    def __init__(self):
        self.stack = {}
        self.outcomes = {}
        self._counter = 0

    def add(self, instance: Instance, name: str = "") -> str:
        if not name:
            self._counter += 1
            name = f"instance{self._counter}"
        self.stack[name] = instance
        self.outcomes.pop(name, None)
        return name

    def get(self, name: str):
        return self.stack.get(name)

    def record(self, name: str, outcome) -> None:
        self.outcomes[name] = outcome


# create instance stack
LcolStack = InstanceStack()
