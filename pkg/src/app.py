##################################################
# schurlab - Streamlit Web UI
# Python version: 3.13.x (project standard)
#
# Description:
# Dashboard over the library: evaluate a single function by any of
# its formulations, and run a verification suite on small bounds.
#
# Features:
# - Compute: s, sp, o, skew-s, skew-sp, skew-o, sstar
# - Verify: equivalence, branching, cauchy, specialization,
#   remarks, symmetry
#
# Requirements:
# - pip install streamlit pandas python-dotenv
##################################################

import logging

import streamlit as st

from evaluator_module.evaluators import FAMILIES, METHODS, evaluate
from identity_module.reports import summarize
from identity_module.settings import load_settings
from identity_module.suites import SUITES, SuiteBounds, run_suite
from partition_module.partitions import GeneralizedPartition

settings = load_settings()
logging.basicConfig(level=settings.log_level)

# Set page config
st.set_page_config(
    page_title="schurlab - Classical Group Characters",
    layout="wide",
    initial_sidebar_state="expanded"
)

# ============================================================================
# SIDEBAR - Function selection
# ============================================================================
st.sidebar.title("Configuration")

family = st.sidebar.selectbox("Family", FAMILIES, index=1)
lambda_text = st.sidebar.text_input(
    "λ (comma separated)",
    value="1",
    help="Trailing zeros count for the skew sp/o families, e.g. 2,1,0"
)
mu_text = st.sidebar.text_input(
    "μ (comma separated)",
    value="",
    help="Only used by the skew families and sstar"
)
nvars = st.sidebar.number_input("Number of variables N", min_value=0, max_value=4, value=1)
method = st.sidebar.selectbox("Method", METHODS, index=METHODS.index("auto"))

st.sidebar.markdown("### Verification bounds")
suite_id = st.sidebar.selectbox("Suite", SUITES)
max_weight = st.sidebar.slider("Max weight |λ|", 0, 6, 2)
max_vars = st.sidebar.slider("Max variables", 1, 3, 1)
max_len = st.sidebar.slider("Max length of μ", 0, 3, 1)
degree = st.sidebar.slider("Series degree D", 0, 6, 2)

# ============================================================================
# MAIN CONTENT
# ============================================================================
st.title("schurlab")

compute_tab, verify_tab = st.tabs(["Compute", "Verify"])

# Session cache; the key invalidates when the inputs change
cache_key = f"{family}_{lambda_text}_{mu_text}_{nvars}_{method}"

if "last_cache_key" not in st.session_state:
    st.session_state.last_cache_key = None
if "value" not in st.session_state:
    st.session_state.value = None
if "reports" not in st.session_state:
    st.session_state.reports = None

if st.session_state.last_cache_key != cache_key:
    st.session_state.value = None
    st.session_state.last_cache_key = cache_key

# ============================================================================
# COMPUTE
# ============================================================================
with compute_tab:
    st.subheader(f"{family} with λ = ({lambda_text}), μ = ({mu_text}), N = {nvars}")

    try:
        if st.session_state.value is None:
            la = GeneralizedPartition.parse(lambda_text)
            mu = GeneralizedPartition.parse(mu_text)
            with st.spinner("Evaluating..."):
                st.session_state.value = evaluate(family, la, mu, int(nvars), method)

        value = st.session_state.value
        st.code(value.to_text(), language="text")

        col1, col2 = st.columns(2)
        if family == "sstar":
            with col1:
                st.metric("Numerator terms", len(value.num))
            with col2:
                st.metric("Reduced", "yes" if value.is_polynomial() else "no")
        else:
            with col1:
                st.metric("Terms", len(value))
            with col2:
                st.metric("Value at x = 1", str(value.coefficient_sum()))

        with st.expander("Show JSON", expanded=False):
            st.json(value.to_json_obj())

    except Exception as e:
        st.error(f"Error evaluating {family}: {str(e)}")

# ============================================================================
# VERIFY
# ============================================================================
with verify_tab:
    st.subheader(f"Suite: {suite_id}")

    if st.button("Run suite"):
        try:
            bounds = SuiteBounds.default(suite_id).override(
                max_weight=max_weight, max_vars=max_vars, max_len=max_len, degree=degree
            )
            with st.spinner(f"Running {suite_id}..."):
                st.session_state.reports = run_suite(suite_id, bounds, settings.threads)
        except Exception as e:
            st.error(f"Error running suite: {str(e)}")
            st.session_state.reports = None

    reports = st.session_state.reports
    if reports is not None:
        metrics_dict, metrics_df = summarize(reports)

        col1, col2, col3, col4 = st.columns(4)
        with col1:
            st.metric("Checks", metrics_dict["total"])
        with col2:
            st.metric("Passed", metrics_dict["passed"])
        with col3:
            st.metric("Failed", metrics_dict["failed"])
        with col4:
            st.metric("Time", f"{metrics_dict['total_elapsed_s']:.2f}s")

        st.dataframe(metrics_df, width="stretch")

        failures = [r for r in reports if not r.passed]
        for report in failures:
            with st.expander(f"FAIL {report.identity_id}: {report.describe()}"):
                st.markdown(f"**LHS:** `{report.lhs.to_text()}`")
                st.markdown(f"**RHS:** `{report.rhs.to_text()}`")
        if not failures:
            st.info("All checks passed")
    else:
        st.info("Choose bounds in the sidebar and run a suite")

# ============================================================================
# FOOTER
# ============================================================================
st.markdown("---")
st.caption("schurlab | exact Laurent polynomial arithmetic")
