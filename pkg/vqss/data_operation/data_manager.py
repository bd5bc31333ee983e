"""
The data managing module.

Reads experiment configs and saves run outputs.

Attributes:
    TRACE_FILE: Loss trace file name.
    SUMMARY_FILE: Summary file name.
    RHO_FILE: Density matrix file name pattern, filled with the source.
    HEATMAP_FILE: Heatmap file name pattern, filled with source and part.

"""
import os
import json
import logging
import tempfile

from . import encoder
from . import decoder
from . import heatmap
from ..errors import vqss_errors


TRACE_FILE = "trace.csv"
SUMMARY_FILE = "summary.json"
RHO_FILE = "rho_{}.json"
HEATMAP_FILE = "rho_{}_{}.svg"

SOURCES = ('ansatz', 'oracle')


def default_file_mode():
    """Return the mode open() gives new files under the current umask."""
    umask = os.umask(0)
    os.umask(umask)
    return 0o666 & ~umask


def write_atomic(path, text):
    """
    Write text to a file through a temporary sibling and a rename.

    Readers see either the old file or the complete new one.

    Args:
        path: destination file path.
        text: file contents.

    Raises:
        OutputWriteException: the directory or file cannot be written.

    """
    directory = os.path.dirname(os.path.abspath(path))
    temp_name = None
    try:
        os.makedirs(directory, exist_ok=True)
        with tempfile.NamedTemporaryFile(
                "w", dir=directory, prefix=".tmp_", suffix=".part", delete=False,
                encoding="utf-8", newline="") as temp_file:
            temp_name = temp_file.name
            temp_file.write(text)
        os.chmod(temp_name, default_file_mode())
        os.replace(temp_name, path)
    except OSError as e:
        if temp_name is not None and os.path.exists(temp_name):
            os.remove(temp_name)
        raise vqss_errors.OutputWriteException("Cannot write {}: {}".format(path, e))


class DataManager:
    """
    The data manager class.

    Reads the experiment config from a file and writes every output file of
    a run into the configured output directory.
    """

    def __init__(self, config_file_name, path_to_calling_file, overrides=None):
        """
        Initialize the DataManager class.

        Args:
            config_file_name: name or path of the config file.
            path_to_calling_file: directory relative names resolve against.
            overrides: config keys replacing the file values, None entries
                are ignored. (default: {None})

        Raises:
            FileNotFoundError: the config file does not exist.
            InvalidConfigException: the config is malformed or invalid.

        """
        self.vqss_log = logging.getLogger(__name__)
        self.vqss_log.addHandler(logging.NullHandler())
        self.vqss_encoder = encoder.VqssEncoder()
        self.vqss_decoder = decoder.VqssDecoder()

        self.path_to_calling_file = path_to_calling_file
        self.config_file_name = os.path.join(self.path_to_calling_file, config_file_name)
        self.overrides = dict(overrides or {})
        self.config = None
        self.read_file()

    def read_file(self):
        """
        Reads file.

        Reads the config file and decodes it into self.config.

        """
        try:
            with open(self.config_file_name) as config_file:
                text = config_file.read()
            self.vqss_log.debug("Opening file: {}".format(self.config_file_name))
        except FileNotFoundError as fnfe:
            self.vqss_log.error("Error finding file: {}".format(fnfe))
            raise fnfe
        self.config = self.vqss_decoder.decode_config(text, self.overrides)

    def get_output_dir(self):
        """
        Output directory of the run.

        Relative directories resolve against the config file's directory.

        Returns:
            Absolute path.

        """
        output_dir = self.config.output_dir
        if not os.path.isabs(output_dir):
            output_dir = os.path.join(os.path.dirname(os.path.abspath(self.config_file_name)), output_dir)
        return output_dir

    def output_path(self, file_name):
        """Return the path of an output file."""
        return os.path.join(self.get_output_dir(), file_name)

    def save_json(self, file_name, document):
        """
        Save a dictionary as a JSON file in the output directory.

        Args:
            file_name: file name inside the output directory.
            document: JSON serializable dictionary.

        Returns:
            Path of the written file.

        """
        path = self.output_path(file_name)
        write_atomic(path, json.dumps(document, indent=2) + "\n")
        self.vqss_log.debug("Saved {}".format(path))
        return path

    def save_run(self, run_result, version):
        """
        Saves every output file of a run.

        Writes the trace, both density matrices, the summary and four
        heatmaps.

        Args:
            run_result: RunResult.
            version: package version string.

        Returns:
            List of written paths.

        Raises:
            OutputWriteException: a file cannot be written.

        """
        written = []
        trace_path = self.output_path(TRACE_FILE)
        write_atomic(trace_path, self.vqss_encoder.encode_trace(run_result))
        written.append(trace_path)

        matrices = {'ansatz': run_result.final_rho, 'oracle': run_result.oracle_rho}
        for source in SOURCES:
            written.append(self.save_json(
                RHO_FILE.format(source), self.vqss_encoder.encode_density_matrix(matrices[source])))

        written.append(self.save_json(
            SUMMARY_FILE, self.vqss_encoder.encode_summary(run_result, self.config, version)))

        for source in SOURCES:
            for part in heatmap.PARTS:
                written.append(emit_heatmap(
                    matrices[source], part, self.output_path(HEATMAP_FILE.format(source, part))))

        self.vqss_log.info("Saved {} files to {}".format(len(written), self.get_output_dir()))
        return written


def load_density_matrix(path):
    """
    Load a density matrix JSON file.

    Args:
        path: file written by DataManager.save_run.

    Returns:
        DensityMatrix, exactly the matrix that was saved.

    Raises:
        FileNotFoundError: the file does not exist.
        InvalidMatrixException: the document is malformed.

    """
    with open(path) as rho_file:
        try:
            document = json.load(rho_file)
        except json.JSONDecodeError as jde:
            raise vqss_errors.InvalidMatrixException("Error decoding {}: {}".format(path, jde))
    return decoder.VqssDecoder().decode_density_matrix(document)


def emit_heatmap(rho, part, path):
    """
    Write an SVG heatmap of one part of a density matrix.

    Args:
        rho: DensityMatrix.
        part: "re" or "im".
        path: destination file.

    Returns:
        The path.

    Raises:
        OutputWriteException: the file cannot be written.

    """
    write_atomic(path, heatmap.heatmap_document(rho, part))
    return path
