"""
One entry point for every graph sampler, with independent seeded streams.
"""

from typing import List, Optional, Union

import numpy as np

from explore import build_core, sample_uniform_augmented_core
from models import DegreeSequence, GraphClass, LabeledGraph, SamplerKind
from parsers import SamplerConfig
from .configuration import sample_configuration_rejection
from .enumeration import enumerate_graphs
from .mcmc import mcmc_double_swap, mcmc_sample
from .trees import sample_tree_prufer


def sample_augmented_pushforward(d: DegreeSequence, rng: np.random.Generator,
                                 max_rejections: int = 10 ** 6) -> LabeledGraph:
    """C(A) for A uniform in A_d; uniform on graphs with degrees d and no cycle components"""
    return build_core(sample_uniform_augmented_core(d, rng, max_rejections))


def spawn_streams(seed: int, count: int) -> List[np.random.Generator]:
    """`count` independent generators; stream i depends only on (seed, i)"""
    return [np.random.default_rng(s) for s in np.random.SeedSequence(seed).spawn(count)]


def sample_graphs(d: DegreeSequence, samples: int, sampler: Union[SamplerKind, str] = SamplerKind.REJECT,
                  graph_class: Union[GraphClass, str] = GraphClass.ALL,
                  config: Optional[SamplerConfig] = None, stream: int = 0) -> List[LabeledGraph]:
    """
    Draw `samples` graphs with the chosen backend.

    Sample i uses stream i of SeedSequence(config.seed + stream), so results
    do not depend on how many samples are requested after it. The MCMC
    backend runs one chain, keeping every mcmc_thin-th state after burn-in.
    """
    config = config or SamplerConfig()
    if isinstance(sampler, str):
        sampler = SamplerKind(sampler)
    if isinstance(graph_class, str):
        graph_class = GraphClass.parse(graph_class)

    if sampler is SamplerKind.ENUMERATE:
        population = enumerate_graphs(d, graph_class)
        if not population:
            raise ValueError(f"no graph with degree sequence {d} in class {graph_class.value}")
        rng = np.random.default_rng(config.seed + stream)
        return [population[int(i)] for i in rng.integers(len(population), size=samples)]

    if sampler is SamplerKind.MCMC:
        if graph_class is not GraphClass.ALL:
            raise ValueError("the swap chain samples only the class 'all'")
        rng = np.random.default_rng(config.seed + stream)
        G = mcmc_sample(d, rng, burnin=config.mcmc_burnin)
        out = [G]
        while len(out) < samples:
            G = mcmc_double_swap(G, config.mcmc_thin, rng)
            out.append(G)
        return out[:samples]

    rngs = spawn_streams(config.seed + stream, samples)
    if sampler is SamplerKind.PRUFER:
        return [sample_tree_prufer(d, rng) for rng in rngs]
    return [sample_configuration_rejection(d, graph_class, rng, config.max_rejections) for rng in rngs]
