from ..InstanceParser.emitter import emit_result
from ..user.instance_stack import LcolStack
from ..user.lcol_cmds import explain_promise, make_instance, solve_instance
from ..aux.settings import SolverSettings
from IPython.core.magic import register_cell_magic, register_line_magic


@register_cell_magic
def lcol(line, cell):
    """Parse the cell as an instance, solve it and keep both under the given name."""

    params = line.split()
    mode = None
    if "-verify" in params:
        mode = "verify"
        params.remove("-verify")
    name = params[0] if params else ""

    instance = make_instance(cell)
    name = LcolStack.add(instance, name)
    outcome = solve_instance(instance, SolverSettings.from_env().override(mode=mode))
    LcolStack.record(name, outcome)
    print(emit_result(outcome), end="")


@register_cell_magic
def lcolcheck(line, cell):

    report = explain_promise(make_instance(cell).graph)
    print(report["status"])
    if "witness" in report:
        print(report["witness"])


@register_line_magic
def lcolshow(line):

    outcome = LcolStack.outcomes.get(line.strip())
    if outcome:
        print(emit_result(outcome, with_stats=True), end="")
    else:
        print("Instance not found")
