# set_env.py
import os

def set_environment_variables():
    results_dir = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir, "results")

    # Set environment variables
    os.environ.setdefault('EIS_results', os.path.abspath(results_dir))
    os.environ.setdefault('EIS_n_proc', str(os.cpu_count() or 1))

    print("Environment variables set successfully.")

def get_results_dir():
    EIS_results = os.environ.get('EIS_results')
    if EIS_results is None:
        print("EIS_results is not defined, reports and log files are written to the current working directory. "
              "Set EIS_results (or call set_environment_variables) if this is not intended.")
        EIS_results = os.getcwd()
    return EIS_results

if __name__ == "__main__":
    set_environment_variables()
