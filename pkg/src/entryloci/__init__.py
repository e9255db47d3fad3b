"""entryloci: exact computation of entry loci, secant dimensions and Segre
points for a catalog of low-degree projective varieties."""

__version__ = "0.1.0"
