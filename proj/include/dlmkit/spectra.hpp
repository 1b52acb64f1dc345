#ifndef DLMKIT_SPECTRA_HPP
#define DLMKIT_SPECTRA_HPP

#include <string>

#include "dlmkit/graph.hpp"
#include "dlmkit/int_matrix.hpp"
#include "dlmkit/spectrum.hpp"

namespace dlm {

/// Tr(G) - D(G): transmissions on the diagonal, negated distances off it.
/// Row sums are zero. Throws DisconnectedGraph.
IntSymMatrix distance_laplacian(const Graph& g);

/// Degree diagonal minus adjacency.
IntSymMatrix laplacian(const Graph& g);

ExactSpectrum dl_spectrum(const Graph& g);
ExactSpectrum laplacian_spectrum(const Graph& g);

/// For a connected graph of diameter <= 2, assembles the distance-Laplacian
/// spectrum {2n - mu_{n-1}, ..., 2n - mu_1} plus a trailing 0 from the
/// ordinary Laplacian spectrum. Throws DiameterTooLarge above diameter 2.
ExactSpectrum dl_spectrum_from_laplacian(const Graph& g);

/// Laplacian spectrum of the complement from the spectrum of the graph:
/// one 0 replaced, the rest mapped mu -> n - mu. Input must be a valid
/// Laplacian spectrum on n vertices (0 present, largest <= n).
ExactSpectrum complement_laplacian_spectrum(const ExactSpectrum& s, int n);

/// Laplacian spectrum of the join of two graphs with Laplacian spectra
/// sg (on n vertices) and sh (on m): {n+m} plus the shifted nonzero parts
/// plus a trailing 0.
ExactSpectrum join_laplacian_spectrum(const ExactSpectrum& sg, int n, const ExactSpectrum& sh,
                                      int m);

/// Cospectrality key: byte encoding of the distance-Laplacian characteristic
/// polynomial. Equal keys iff equal spectra with multiplicity.
std::string spectrum_key(const Graph& g);

} // namespace dlm

#endif
