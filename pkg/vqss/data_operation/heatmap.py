"""
The heatmap module.

Renders one part of a density matrix as an SVG grid.

Cell (i, j) shows entry row i, column j. Values map onto LEVELS colors of
a diverging scale over [-max|v|, +max|v|]: level 0 is blue at -max|v|, the
middle level is white at zero and the last level is red at +max|v|. Every
cell carries its level in a data-level attribute so two heatmaps can be
compared without parsing colors.

Attributes:
    LEVELS: Number of color levels, odd so zero has its own level.
    CELL_SIZE: Cell edge in pixels.
    PARTS: Accepted matrix parts.

"""
import logging

import numpy as np

from ..errors import vqss_errors


LEVELS = 21
CELL_SIZE = 24
PARTS = ('re', 'im')

NEGATIVE_RGB = (33, 102, 172)
ZERO_RGB = (255, 255, 255)
POSITIVE_RGB = (178, 24, 43)

vqss_log = logging.getLogger(__name__)
vqss_log.addHandler(logging.NullHandler())


def color_index(value, vmax, levels=LEVELS):
    """
    Level of a value on the diverging scale.

    Args:
        value: real number.
        vmax: largest magnitude on the scale; 0 maps everything to the
            middle level.
        levels: number of levels, odd. (default: {LEVELS})

    Returns:
        Integer level in [0, levels - 1].

    """
    middle = (levels - 1) // 2
    if vmax <= 0:
        return middle
    scaled = middle * float(value) / float(vmax)
    step = min(middle, int(np.floor(abs(scaled) + 0.5)))
    return middle + step if scaled >= 0 else middle - step


def level_color(level, levels=LEVELS):
    """
    Hex color of a level.

    Args:
        level: integer in [0, levels - 1].
        levels: number of levels. (default: {LEVELS})

    Returns:
        Color string "#rrggbb".

    """
    middle = (levels - 1) // 2
    weight = abs(level - middle) / middle
    end = NEGATIVE_RGB if level < middle else POSITIVE_RGB
    rgb = [int(round(zero + (far - zero) * weight)) for zero, far in zip(ZERO_RGB, end)]
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def matrix_part(rho, part):
    """
    Real or imaginary part of a density matrix.

    Args:
        rho: DensityMatrix.
        part: "re" or "im".

    Returns:
        Real numpy array.

    Raises:
        InvalidOptionsException: part is not one of PARTS.

    """
    if part not in PARTS:
        raise vqss_errors.InvalidOptionsException(
            "part must be one of {}, got '{}'".format(", ".join(PARTS), part))
    matrix = np.asarray(rho.matrix)
    return matrix.real if part == 're' else matrix.imag


def level_grid(values, levels=LEVELS):
    """
    Levels of every entry of a real matrix.

    Args:
        values: real 2D array.
        levels: number of levels. (default: {LEVELS})

    Returns:
        Integer numpy array of the same shape.

    """
    values = np.asarray(values, dtype=float)
    vmax = float(np.max(np.abs(values))) if values.size else 0.0
    return np.array([[color_index(entry, vmax, levels) for entry in row] for row in values], dtype=int)


def render_heatmap(values, title=None):
    """
    Render a real matrix as SVG text.

    Args:
        values: real 2D array.
        title: optional title element. (default: {None})

    Returns:
        SVG document text, identical for identical input.

    """
    grid = level_grid(values)
    rows, cols = grid.shape
    width = cols * CELL_SIZE
    height = rows * CELL_SIZE
    lines = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{1}" viewBox="0 0 {0} {1}">'.format(
            width, height)
    ]
    if title:
        lines.append('<title>{}</title>'.format(title))
    for i in range(rows):
        for j in range(cols):
            level = int(grid[i, j])
            lines.append(
                '<rect x="{}" y="{}" width="{size}" height="{size}" fill="{}" data-row="{}" '
                'data-col="{}" data-level="{}"/>'.format(
                    j * CELL_SIZE, i * CELL_SIZE, level_color(level), i, j, level, size=CELL_SIZE))
    lines.append('</svg>')
    return "\n".join(lines) + "\n"


def heatmap_document(rho, part):
    """
    SVG heatmap of one part of a density matrix.

    Args:
        rho: DensityMatrix.
        part: "re" or "im".

    Returns:
        SVG document text.

    """
    values = matrix_part(rho, part)
    vqss_log.debug("Rendering {} part of a {}x{} matrix".format(part, *values.shape))
    return render_heatmap(values, title="{} part, {} qubits".format(part, rho.num_qubits))
