namespace pantograph {}
