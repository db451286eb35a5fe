"""Finite lattices generated by join and meet-prime, with Hasse diagram export"""

import json
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import networkx as nx
import numpy as np
import pandas as pd

from config.settings import DEFAULT_LATTICE_OPS, LATTICE_ELEMENT_CAP
from src.core.errors import CapExceeded, NoLGS
from src.families.family import family_eq
from .elements import LatticeElement
from .operations import join, leq, meet, meet_prime

logger = logging.getLogger(__name__)

OPERATIONS = {
    "join": join,
    "meet": meet,
    "meet_prime": meet_prime,
}


@dataclass
class GeneratedLattice:
    elements: List[LatticeElement]
    ops: Tuple[str, ...]
    tables: Dict[str, np.ndarray] = field(default_factory=dict)

    def __len__(self):
        return len(self.elements)

    def index_of(self, family):
        for i, element in enumerate(self.elements):
            if element.family == family:
                return i
        for i, element in enumerate(self.elements):
            if family_eq(element.family, family):
                return i
        return None

    def label(self, i):
        return self.elements[i].name or f"e{i}"

    def order_matrix(self) -> np.ndarray:
        """order[i, j] == 1 iff element i <= element j."""
        n = len(self.elements)
        if "join" in self.tables:
            table = self.tables["join"]
            return (table == np.arange(n)[np.newaxis, :]).astype(int)
        return np.array([[int(leq(a, b)) for b in self.elements] for a in self.elements])

    def hasse(self) -> List[Tuple[int, int]]:
        """Covering pairs (lower, upper)."""
        order = self.order_matrix()
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.elements)))
        graph.add_edges_from((i, j) for i, j in zip(*np.nonzero(order)) if i != j)
        return sorted((int(i), int(j)) for i, j in nx.transitive_reduction(graph).edges())

    def op_table(self, name) -> pd.DataFrame:
        labels = [self.label(i) for i in range(len(self.elements))]
        return pd.DataFrame(self.tables[name], index=labels, columns=labels)

    def to_json(self):
        return {
            "nodes": [{"id": i, "name": self.label(i), "family": e.family.to_dsl()}
                      for i, e in enumerate(self.elements)],
            "edges": [[lo, hi] for lo, hi in self.hasse()],
            "tables": {name: table.tolist() for name, table in self.tables.items()},
        }

    def to_dot(self):
        lines = ["digraph lattice {", "\trankdir = BT;"]
        for i, element in enumerate(self.elements):
            tooltip = element.family.to_dsl().replace('"', "'")
            lines.append(f'\t"{i}" [label="{self.label(i)}", tooltip="{tooltip}"];')
        for lo, hi in self.hasse():
            lines.append(f'\t"{lo}" -> "{hi}";')
        lines.append("}")
        return "\n".join(lines)

    def dumps(self):
        return json.dumps(self.to_json(), indent=2)


def generate_lattice(generators, ops=DEFAULT_LATTICE_OPS, cap=LATTICE_ELEMENT_CAP) -> GeneratedLattice:
    """Close ``generators`` under ``ops``, deduplicating by family equality."""
    ops = tuple(ops)
    unknown = set(ops) - set(OPERATIONS)
    if unknown:
        raise ValueError(f"unknown lattice operations {sorted(unknown)}")
    if "meet_prime" in ops:
        for element in generators:
            if not element.has_lgs:
                raise NoLGS(f"{element.label()} has no least generating set")

    lattice = GeneratedLattice([], ops)
    for element in generators:
        if lattice.index_of(element.family) is None:
            lattice.elements.append(element)

    results = {op: {} for op in ops}
    done = 0
    while done < len(lattice.elements):
        # every pair involving an element below ``done`` has been evaluated
        n = len(lattice.elements)
        for i in range(n):
            for j in range(n):
                if i < done and j < done:
                    continue
                for op in ops:
                    produced = OPERATIONS[op](lattice.elements[i], lattice.elements[j])
                    index = lattice.index_of(produced.family)
                    if index is None:
                        lattice.elements.append(produced)
                        index = len(lattice.elements) - 1
                        if len(lattice.elements) > cap:
                            raise CapExceeded(f"lattice exceeded {cap} elements", partial=lattice)
                    results[op][(i, j)] = index
        done = n

    size = len(lattice.elements)
    for op in ops:
        table = np.zeros((size, size), dtype=int)
        for (i, j), index in results[op].items():
            table[i, j] = index
        lattice.tables[op] = table
    logger.info("generated lattice with %d elements under %s", size, ", ".join(ops))
    return lattice


def check_lattice_laws(lattice: GeneratedLattice):
    """Violated laws of (join, meet_prime) over all pairs and triples, as readable strings."""
    failures = []
    n = len(lattice)
    if "join" not in lattice.tables or "meet_prime" not in lattice.tables:
        raise ValueError("lattice laws need both join and meet_prime tables")
    j, m = lattice.tables["join"], lattice.tables["meet_prime"]
    for x in range(n):
        if j[x, x] != x or m[x, x] != x:
            failures.append(f"idempotence fails at e{x}")
        for y in range(n):
            if j[x, y] != j[y, x]:
                failures.append(f"join not commutative at e{x}, e{y}")
            if m[x, y] != m[y, x]:
                failures.append(f"meet_prime not commutative at e{x}, e{y}")
            if m[x, j[x, y]] != x:
                failures.append(f"absorption x ∧′ (x ∨ y) fails at e{x}, e{y}")
            if j[x, m[x, y]] != x:
                failures.append(f"absorption x ∨ (x ∧′ y) fails at e{x}, e{y}")
            for z in range(n):
                if j[j[x, y], z] != j[x, j[y, z]]:
                    failures.append(f"join not associative at e{x}, e{y}, e{z}")
                if m[m[x, y], z] != m[x, m[y, z]]:
                    failures.append(f"meet_prime not associative at e{x}, e{y}, e{z}")
    return failures
