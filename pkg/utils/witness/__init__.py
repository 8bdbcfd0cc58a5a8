# Módulo de testigos del lema de recoloración
from .matching import LemmaWitness, WitnessStep, extract_matching_witness, verify_matching_witness
from .xy import XYWitness, extract_xy_witness

__all__ = [
    'LemmaWitness', 'WitnessStep', 'extract_matching_witness', 'verify_matching_witness',
    'XYWitness', 'extract_xy_witness',
]
