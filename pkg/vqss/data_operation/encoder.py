"""
The vqss encoding module.

Handles encoding run results into the documents written to disk.

Attributes:
    TRACE_FIELDS: Header of the trace CSV.

"""
import csv
import io
import logging

import numpy as np


TRACE_FIELDS = ('iter', 'loss', 'fidelity')


def float_text(value):
    """Return the shortest text that parses back to the same float."""
    return repr(float(value))


class VqssEncoder:
    """
    The vqss encoding class.

    Turns density matrices, loss traces and run results into plain
    dictionaries and CSV text. Floats keep their shortest round-trip form so
    re-reading a file gives back the exact in-memory values.
    """

    def __init__(self):
        """
        Initialize VqssEncoder.

        Initializes the VqssEncoder class.
        """
        self.vqss_log = logging.getLogger(__name__)
        self.vqss_log.addHandler(logging.NullHandler())

    def encode_density_matrix(self, rho):
        """
        Encode a DensityMatrix.

        Args:
            rho: DensityMatrix.

        Returns:
            Dictionary {"n": qubits, "re": rows, "im": rows}, row-major.

        """
        matrix = np.asarray(rho.matrix)
        encoded = {
            'n': rho.num_qubits,
            're': matrix.real.tolist(),
            'im': matrix.imag.tolist(),
        }
        self.vqss_log.debug("Density matrix of {} qubits encoded".format(rho.num_qubits))
        return encoded

    def encode_trace(self, run_result):
        """
        Encode the loss trace as CSV text.

        One row per optimizer cycle. The fidelity column is empty on cycles
        where no fidelity was recorded.

        Args:
            run_result: RunResult.

        Returns:
            CSV text with header iter,loss,fidelity.

        """
        fidelities = dict(run_result.fidelity_trace)
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(TRACE_FIELDS)
        for iteration, loss_value in run_result.loss_trace:
            fidelity_value = fidelities.get(iteration)
            writer.writerow([
                iteration,
                float_text(loss_value),
                "" if fidelity_value is None else float_text(fidelity_value)
            ])
        return buffer.getvalue()

    def encode_summary(self, run_result, config, version):
        """
        Encode the run summary.

        Args:
            run_result: RunResult.
            config: ExperimentConfig of the run.
            version: package version string.

        Returns:
            Dictionary with the summary.json keys.

        """
        report = run_result.oracle_report
        encoded = {
            'version': version,
            'final_loss': float(run_result.best_loss),
            'final_fidelity': float(run_result.final_fidelity),
            'iterations': int(run_result.total_iterations),
            'evaluations': int(run_result.evaluations),
            'restarts': int(run_result.restarts),
            'parameter_count': len(run_result.best_params),
            'wall_time_seconds': float(run_result.wall_time_seconds),
            'oracle_residual': report.residual,
            'oracle_rank': report.rank,
            'min_ancillas': report.min_ancillas,
            'config': config.as_dict(),
        }
        self.vqss_log.debug("Summary JSON: {}".format(encoded))
        return encoded
