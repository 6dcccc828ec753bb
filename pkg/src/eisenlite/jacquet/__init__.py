from .multiplicity import MultiplicityQuery, OrbitEntry, multiplicity, orbit_table

__all__ = [
    "MultiplicityQuery",
    "OrbitEntry",
    "multiplicity",
    "orbit_table",
]
