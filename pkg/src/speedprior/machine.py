"""Deterministic universal binary machine with on-demand program bits.

Program bits are the instruction stream itself: the interpreter decodes
3-bit opcodes (plus operands) straight from the bits it has been fed, and
"requesting an input bit" means needing a bit past the consumed frontier.
Every bitstring is therefore a program prefix, and the length of a program
is exactly the number of bits it demanded.

Opcode table (MSB-first), version 1:

    000 OUT0   write 0 at the output head (append when the head is at the end)
    001 OUT1   write 1 at the output head
    010 LEFT   move work head left
    011 RIGHT  move work head right
    100 SET    work cell := 1
    101 CLR    work cell := 0
    110 JZ k   4 operand bits k: if work cell is 0, jump to the start of the
               k-th previous executed instruction (k=0: own start)
    111 EXT    2 operand bits: 00 HALT, 01 OUTLEFT, 10 OUTRIGHT,
               11 DELOUT (general output mode only)

Output disciplines:
  * monotone: append-only output; any edit instruction aborts.
  * enumerable: edits allowed only if the output value 0.output never
    decreases (a single overwrite decreases iff it writes a smaller bit).
  * general: arbitrary edits, including deleting the last output square.

A discipline violation or malformed jump freezes the machine ("aborted")
with the output at its pre-instruction value. The aborting instruction
counts as an executed step, as does HALT.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum


class Discipline(Enum):
    MONOTONE = "mtm"
    ENUMERABLE = "eom"
    GENERAL = "gtm"

    @staticmethod
    def parse(name: str) -> "Discipline":
        for d in Discipline:
            if d.value == name or d.name.lower() == name.lower():
                return d
        raise ValueError(f"unknown discipline: {name!r}")


# Status tokens (also the wire form in caches and reports).
RUNNING = "running"
AWAITING = "awaiting_bit"
HALTED = "halted"
ABORTED = "aborted"
BUDGET = "budget_exhausted"

FROZEN_STATUSES = (HALTED, ABORTED, AWAITING)

_OPCODE_TABLE_TEXT = (
    "v1;000=OUT0;001=OUT1;010=LEFT;011=RIGHT;100=SET;101=CLR;"
    "110=JZ+4;111=EXT+2(00=HALT,01=OUTLEFT,10=OUTRIGHT,11=DELOUT);"
    "jz=k-th-previous-boundary;abort=freeze;step-counts-abort-and-halt"
)


def machine_hash() -> str:
    """Stable digest of the opcode table; embedded in caches and reports."""
    return hashlib.sha256(_OPCODE_TABLE_TEXT.encode()).hexdigest()[:12]


@dataclass(frozen=True)
class RunOutcome:
    output: str
    consumed: int
    steps: int
    status: str
    stable_since: int  # last step at which the output changed; 0 if never


class MachineState:
    """Full interpreter state; a value object safe to clone and hand around."""

    __slots__ = (
        "discipline",
        "consumed",
        "pc",
        "boundaries",
        "ones",
        "work_head",
        "output",
        "out_head",
        "steps",
        "status",
        "output_changed",
    )

    def __init__(self, discipline: Discipline):
        self.discipline = discipline
        self.consumed: list[int] = []  # program bits requested so far
        self.pc = 0  # replay offset into consumed
        self.boundaries: list[int] = []  # start offset of each executed instruction
        self.ones: set[int] = set()  # work tape cells holding 1
        self.work_head = 0
        self.output: list[str] = []
        self.out_head = 0
        self.steps = 0
        self.status = RUNNING
        self.output_changed = False

    def clone(self) -> "MachineState":
        c = MachineState.__new__(MachineState)
        c.discipline = self.discipline
        c.consumed = self.consumed[:]
        c.pc = self.pc
        c.boundaries = self.boundaries[:]
        c.ones = set(self.ones)
        c.work_head = self.work_head
        c.output = self.output[:]
        c.out_head = self.out_head
        c.steps = self.steps
        c.status = self.status
        c.output_changed = self.output_changed
        return c

    def snapshot(self) -> tuple:
        """Comparable full-state view (used by coherence tests)."""
        return (
            self.discipline,
            tuple(self.consumed),
            self.pc,
            tuple(self.boundaries),
            frozenset(self.ones),
            self.work_head,
            tuple(self.output),
            self.out_head,
            self.steps,
            self.status,
        )

    def output_str(self) -> str:
        return "".join(self.output)

    def supply_bit(self, bit: int):
        if bit not in (0, 1):
            raise ValueError("program bits are 0 or 1")
        self.consumed.append(bit)
        if self.status == AWAITING:
            self.status = RUNNING

    def _abort(self):
        self.status = ABORTED

    def _write_output(self, v: str):
        k = self.out_head
        if self.discipline is Discipline.MONOTONE:
            # head is structurally pinned to the end: always an append
            self.output.append(v)
            self.out_head = len(self.output)
            self.output_changed = True
            return
        if k == len(self.output):
            self.output.append(v)
            self.out_head = k + 1
            self.output_changed = True
            return
        old = self.output[k]
        if old == v:
            return  # no-op overwrite; value unchanged, allowed everywhere
        if self.discipline is Discipline.ENUMERABLE and v < old:
            # overwriting a bit with a smaller one is exactly a decrease of
            # the output value 0.output
            self._abort()
            return
        self.output[k] = v
        self.output_changed = True

    def step(self):
        """Execute one instruction, or flag AWAITING if a bit is missing.

        Decode stalls consume no steps; the demanded bit is always the one
        just past the consumed frontier.
        """
        if self.status != RUNNING:
            raise RuntimeError(f"step() on a machine in status {self.status}")
        need = self.pc + 3
        if need > len(self.consumed):
            self.status = AWAITING
            return
        c = self.consumed
        op = (c[self.pc] << 2) | (c[self.pc + 1] << 1) | c[self.pc + 2]
        if op == 6:  # JZ
            need += 4
        elif op == 7:  # EXT
            need += 2
        if need > len(self.consumed):
            self.status = AWAITING
            return

        self.boundaries.append(self.pc)
        self.steps += 1

        if op <= 1:  # OUT0 / OUT1
            self._write_output("1" if op else "0")
            self.pc += 3
        elif op == 2:  # LEFT
            self.work_head -= 1
            self.pc += 3
        elif op == 3:  # RIGHT
            self.work_head += 1
            self.pc += 3
        elif op == 4:  # SET
            self.ones.add(self.work_head)
            self.pc += 3
        elif op == 5:  # CLR
            self.ones.discard(self.work_head)
            self.pc += 3
        elif op == 6:  # JZ k
            k = (c[self.pc + 3] << 3) | (c[self.pc + 4] << 2) | (c[self.pc + 5] << 1) | c[self.pc + 6]
            if self.work_head in self.ones:
                self.pc += 7
            else:
                target = len(self.boundaries) - 1 - k
                if target < 0:
                    self._abort()  # jump before instruction history
                else:
                    self.pc = self.boundaries[target]
        else:  # EXT
            sub = (c[self.pc + 3] << 1) | c[self.pc + 4]
            if sub == 0:  # HALT: output frozen forever under every discipline
                self.status = HALTED
                self.pc += 5
            elif sub == 1:  # OUTLEFT
                if self.discipline is Discipline.MONOTONE or self.out_head == 0:
                    self._abort()
                else:
                    self.out_head -= 1
                    self.pc += 5
            elif sub == 2:  # OUTRIGHT
                if self.discipline is Discipline.MONOTONE or self.out_head == len(self.output):
                    self._abort()
                else:
                    self.out_head += 1
                    self.pc += 5
            else:  # DELOUT
                if self.discipline is not Discipline.GENERAL or not self.output:
                    self._abort()
                else:
                    self.output.pop()
                    if self.out_head > len(self.output):
                        self.out_head = len(self.output)
                    self.output_changed = True
                    self.pc += 5


def _drive(program: str, discipline: Discipline, budget: int, trace=None):
    """Run a program prefix to completion or budget; shared by run/trace."""
    state = MachineState(discipline)
    bits = [1 if ch == "1" else 0 for ch in program]
    supplied = 0
    stable_since = 0
    while True:
        if state.status in (HALTED, ABORTED):
            final = state.status
            break
        if state.steps >= budget:
            final = BUDGET
            break
        if state.status == AWAITING:
            if supplied < len(bits):
                state.supply_bit(bits[supplied])
                supplied += 1
                continue
            final = AWAITING
            break
        state.output_changed = False
        state.step()
        if state.output_changed:
            stable_since = state.steps
            if trace is not None:
                trace.append((state.steps, state.output_str()))
    return RunOutcome(
        output=state.output_str(),
        consumed=len(state.consumed),
        steps=state.steps,
        status=final,
        stable_since=stable_since,
    )


def run(program: str, discipline: Discipline, budget: int) -> RunOutcome:
    """Execute until halt, abort, bit starvation, or the step budget.

    Deterministic: identical inputs give identical outcomes. A zero budget
    yields budget_exhausted before anything happens, even for the empty
    program.
    """
    if budget < 0:
        raise ValueError("budget must be >= 0")
    return _drive(program, discipline, budget)


def output_trace(program: str, discipline: Discipline, budget: int):
    """(step, output snapshot) at every step the output changed."""
    trace: list[tuple[int, str]] = []
    _drive(program, discipline, budget, trace)
    return trace
