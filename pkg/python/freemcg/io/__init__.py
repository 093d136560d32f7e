from .arrayfile import ArrayFile, read_array, write_array
from .pnm import write_pgm, write_ppm, export_image
