fixture file: aruco_ros/src/marker_publish.cpp
